#include "hookprod/persistence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hookprod/errors.hpp"
#include "hookprod/fp.hpp"

namespace hookprod {

namespace detail {

std::vector<index_t> reduction_pairs(const FilteredComplex& complex,
                                     const std::vector<index_t>& order, value_t prime) {
	const index_t n = static_cast<index_t>(order.size());
	std::vector<index_t> position(static_cast<std::size_t>(complex.size()), -1);
	for (index_t j = 0; j < n; ++j)
		position[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = j;

	std::map<Simplex, index_t> simplex_index;
	for (index_t i = 0; i < complex.size(); ++i) simplex_index.emplace(complex.simplex(i), i);

	FpMatrix boundary;
	boundary.nrows = n;
	boundary.modulus = prime;
	boundary.columns.resize(static_cast<std::size_t>(n));
	for (index_t j = 0; j < n; ++j) {
		const Simplex& s = complex.simplex(order[static_cast<std::size_t>(j)]);
		FpColumn col;
		value_t sign = 1;
		for (const Simplex& face : s.faces()) {
			index_t fi = simplex_index.at(face);
			index_t row = position[static_cast<std::size_t>(fi)];
			col.push_back({row, sign == 1 ? 1 : prime - 1});
			sign = -sign;
		}
		std::sort(col.begin(), col.end(),
		          [](const FpEntry& a, const FpEntry& b) { return a.row < b.row; });
		boundary.columns[static_cast<std::size_t>(j)] = std::move(col);
	}

	return reduce(boundary).pivot_row;
}

}  // namespace detail

namespace {

std::vector<index_t> filtration_order(const FilteredComplex& complex, Function which) {
	std::vector<index_t> order(static_cast<std::size_t>(complex.size()));
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](index_t a, index_t b) {
		auto key = [&](index_t i) {
			return std::tuple(complex.value(i, which), complex.simplex(i).dimension(), i);
		};
		return key(a) < key(b);
	});
	return order;
}

}  // namespace

PersistenceDiagram compute_diagram(const FilteredComplex& complex, Function which,
                                   index_t degree, value_t prime) {
	if (which == Function::g && !complex.has_g()) throw MissingG();
	const std::vector<index_t> order = filtration_order(complex, which);
	const std::vector<index_t> pairs = detail::reduction_pairs(complex, order, prime);
	const index_t n = static_cast<index_t>(order.size());

	std::vector<char> killed(static_cast<std::size_t>(n), 0);
	PersistenceDiagram diagram;
	for (index_t j = 0; j < n; ++j) {
		index_t i = pairs[static_cast<std::size_t>(j)];
		if (i < 0) continue;
		killed[static_cast<std::size_t>(i)] = 1;
		const index_t birth_simplex = order[static_cast<std::size_t>(i)];
		if (complex.simplex(birth_simplex).dimension() != degree) continue;
		diagram.points.push_back({complex.value(birth_simplex, which),
		                          complex.value(order[static_cast<std::size_t>(j)], which)});
	}
	for (index_t i = 0; i < n; ++i) {
		if (pairs[static_cast<std::size_t>(i)] >= 0 || killed[static_cast<std::size_t>(i)])
			continue;
		const index_t simplex = order[static_cast<std::size_t>(i)];
		if (complex.simplex(simplex).dimension() != degree) continue;
		diagram.points.push_back({complex.value(simplex, which), infinite_value});
	}
	std::sort(diagram.points.begin(), diagram.points.end());
	return diagram;
}

index_t inclusion_rank(const FilteredComplex& complex, index_t degree, value_t prime,
                       GridPoint r, GridPoint s) {
	if (!complex.has_g()) throw MissingG();
	if (!poset_leq(r, s)) throw Error("inclusion_rank requires r <= s");

	auto in_sub = [&](index_t i, GridPoint t) {
		return complex.value(i, Function::f) <= t.x && complex.value(i, Function::g) <= t.y;
	};
	std::vector<index_t> order;
	for (index_t i = 0; i < complex.size(); ++i)
		if (in_sub(i, s)) order.push_back(i);
	std::stable_sort(order.begin(), order.end(), [&](index_t a, index_t b) {
		auto key = [&](index_t i) {
			return std::tuple(in_sub(i, r) ? 0 : 1, complex.simplex(i).dimension(), i);
		};
		return key(a) < key(b);
	});

	const std::vector<index_t> pairs = detail::reduction_pairs(complex, order, prime);
	const index_t n = static_cast<index_t>(order.size());
	std::vector<char> killed(static_cast<std::size_t>(n), 0);
	for (index_t j = 0; j < n; ++j)
		if (pairs[static_cast<std::size_t>(j)] >= 0)
			killed[static_cast<std::size_t>(pairs[static_cast<std::size_t>(j)])] = 1;

	// Degree-k classes born within the inner sublevel that survive the whole
	// outer one.
	index_t result = 0;
	for (index_t i = 0; i < n; ++i) {
		const index_t simplex = order[static_cast<std::size_t>(i)];
		if (pairs[static_cast<std::size_t>(i)] < 0 && !killed[static_cast<std::size_t>(i)] &&
		    in_sub(simplex, r) && complex.simplex(simplex).dimension() == degree)
			++result;
	}
	return result;
}

std::vector<std::pair<DiagramPoint, DiagramPoint>> matched_pairs(
    const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g, const Matching& matching) {
	matching.validate(pd_f, pd_g);
	std::vector<std::pair<DiagramPoint, DiagramPoint>> result;
	result.reserve(static_cast<std::size_t>(matching.entry_count()));
	for (const auto& e : matching.pairs)
		result.emplace_back(pd_f.points[static_cast<std::size_t>(e.f_index)],
		                    pd_g.points[static_cast<std::size_t>(e.g_index)]);
	for (const auto& e : matching.f_to_diagonal)
		result.emplace_back(pd_f.points[static_cast<std::size_t>(e.f_index)],
		                    DiagramPoint{e.t, e.t});
	for (const auto& e : matching.diagonal_to_g)
		result.emplace_back(DiagramPoint{e.t, e.t},
		                    pd_g.points[static_cast<std::size_t>(e.g_index)]);
	return result;
}

std::vector<DiagramPoint> retained_generators(const PersistenceDiagram& pd_f,
                                              const PersistenceDiagram& pd_g,
                                              const Matching& matching) {
	std::vector<DiagramPoint> result;
	for (const auto& [fp, gp] : matched_pairs(pd_f, pd_g, matching))
		if (!fp.is_diagonal() || !gp.is_diagonal()) result.push_back(fp);
	return result;
}

}  // namespace hookprod
