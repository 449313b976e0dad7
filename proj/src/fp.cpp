#include "hookprod/fp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace hookprod {

value_t mod_inverse(value_t a, value_t p) {
	// Extended Euclid; p prime, a nonzero mod p.
	value_t t = 0, new_t = 1, r = p, new_r = a % p;
	while (new_r != 0) {
		value_t q = r / new_r;
		t = std::exchange(new_t, t - q * new_t);
		r = std::exchange(new_r, r - q * new_r);
	}
	if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
	return t < 0 ? t + p : t;
}

bool is_prime(value_t p) {
	if (p < 2) return false;
	for (value_t d = 2; d * d <= p; ++d)
		if (p % d == 0) return false;
	return true;
}

FpColumn column_axpy(const FpColumn& target, const FpColumn& source, value_t c, value_t p) {
	c %= p;
	if (c < 0) c += p;
	if (c == 0) return target;
	FpColumn out;
	out.reserve(target.size() + source.size());
	std::size_t i = 0, j = 0;
	while (i < target.size() || j < source.size()) {
		if (j == source.size() || (i < target.size() && target[i].row < source[j].row)) {
			out.push_back(target[i++]);
		} else if (i == target.size() || source[j].row < target[i].row) {
			out.push_back({source[j].row, (source[j].coef * c) % p});
			++j;
		} else {
			value_t v = (target[i].coef + source[j].coef * c) % p;
			if (v != 0) out.push_back({target[i].row, v});
			++i;
			++j;
		}
	}
	return out;
}

index_t Reduction::rank() const {
	return static_cast<index_t>(std::count_if(pivot_row.begin(), pivot_row.end(),
	                                          [](index_t r) { return r >= 0; }));
}

Reduction reduce(const FpMatrix& matrix) {
	const value_t p = matrix.modulus;
	Reduction result;
	result.matrix = matrix;
	result.pivot_row.assign(matrix.columns.size(), -1);

	// pivot row -> column owning it
	std::unordered_map<index_t, index_t> owner;
	for (index_t j = 0; j < matrix.ncols(); ++j) {
		FpColumn& col = result.matrix.columns[static_cast<std::size_t>(j)];
		while (!col.empty()) {
			index_t low = col.back().row;
			auto it = owner.find(low);
			if (it == owner.end()) break;
			const FpColumn& other = result.matrix.columns[static_cast<std::size_t>(it->second)];
			// cancel the low entry: col += (-coef / other_coef) * other
			value_t factor = (p - (col.back().coef * mod_inverse(other.back().coef, p)) % p) % p;
			col = column_axpy(col, other, factor, p);
		}
		if (!col.empty()) {
			result.pivot_row[static_cast<std::size_t>(j)] = col.back().row;
			owner.emplace(col.back().row, j);
		}
	}
	return result;
}

index_t rank(const FpMatrix& matrix) { return reduce(matrix).rank(); }

}  // namespace hookprod
