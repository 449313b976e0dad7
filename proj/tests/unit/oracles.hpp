#pragma once

// Test-only oracles: dense row-reduction linear algebra over F_p, brute-force
// sublevel homology, the rank-formula diagram, and random instance
// generators. Deliberately independent of the library's sparse column
// reduction path.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hookprod/complex.hpp"
#include "hookprod/diagram.hpp"
#include "hookprod/hooks.hpp"
#include "hookprod/matching.hpp"
#include "hookprod/types.hpp"

namespace oracles {

using hookprod::index_t;
using hookprod::value_t;
using DenseMatrix = std::vector<std::vector<value_t>>;  // row major

inline value_t inv_mod(value_t a, value_t p) {
	value_t result = 1, base = a % p, e = p - 2;
	while (e) {
		if (e & 1) result = result * base % p;
		base = base * base % p;
		e >>= 1;
	}
	return result;
}

inline index_t rank_dense(DenseMatrix m, value_t p) {
	if (m.empty()) return 0;
	const std::size_t rows = m.size(), cols = m[0].size();
	index_t rank = 0;
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < rows; ++col) {
		std::size_t pivot = row;
		while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
		if (pivot == rows) continue;
		std::swap(m[row], m[pivot]);
		const value_t inv = inv_mod((m[row][col] % p + p) % p, p);
		for (std::size_t r = 0; r < rows; ++r) {
			if (r == row) continue;
			const value_t factor = (m[r][col] % p + p) % p * inv % p;
			for (std::size_t c = 0; c < cols; ++c)
				m[r][c] = ((m[r][c] - factor * m[row][c]) % p + p) % p;
		}
		++row;
		++rank;
	}
	return rank;
}

// Basis of the kernel of m (as column vectors), by reducing the transpose
// augmented with an identity block. The column count is explicit since a
// zero-row matrix still has columns.
inline DenseMatrix kernel_dense(const DenseMatrix& m, std::size_t cols, value_t p) {
	const std::size_t rows = m.size();
	// work on columns: each row of `work` is one matrix column plus tracking
	DenseMatrix work(cols, std::vector<value_t>(rows + cols, 0));
	for (std::size_t c = 0; c < cols; ++c) {
		for (std::size_t r = 0; r < rows; ++r) work[c][r] = (m[r][c] % p + p) % p;
		work[c][rows + c] = 1;
	}
	// eliminate matrix part
	std::size_t done = 0;
	for (std::size_t col = 0; col < rows && done < cols; ++col) {
		std::size_t pivot = done;
		while (pivot < cols && work[pivot][col] == 0) ++pivot;
		if (pivot == cols) continue;
		std::swap(work[done], work[pivot]);
		const value_t inv = inv_mod(work[done][col], p);
		for (std::size_t r = 0; r < cols; ++r) {
			if (r == done) continue;
			const value_t factor = work[r][col] * inv % p;
			for (std::size_t c = 0; c < rows + cols; ++c)
				work[r][c] = ((work[r][c] - factor * work[done][c]) % p + p) % p;
		}
		++done;
	}
	DenseMatrix kernel;
	for (std::size_t r = done; r < cols; ++r) {
		bool zero = true;
		for (std::size_t c = 0; c < rows; ++c) zero = zero && work[r][c] == 0;
		if (!zero) continue;
		kernel.emplace_back(work[r].begin() + static_cast<std::ptrdiff_t>(rows),
		                    work[r].end());
	}
	return kernel;  // each entry: coefficients over the matrix columns
}

// Boundary matrix of the k-simplices of the masked subcomplex, rows indexed
// by the (k-1)-simplices of the same subcomplex.
inline DenseMatrix boundary_dense(const hookprod::FilteredComplex& complex,
                                  const std::vector<char>& mask, index_t k, value_t p) {
	std::map<hookprod::Simplex, std::size_t> row_of;
	std::vector<index_t> cols;
	for (index_t i = 0; i < complex.size(); ++i) {
		if (!mask[static_cast<std::size_t>(i)]) continue;
		if (complex.simplex(i).dimension() == k - 1)
			row_of.emplace(complex.simplex(i), row_of.size());
		else if (complex.simplex(i).dimension() == k)
			cols.push_back(i);
	}
	DenseMatrix m(row_of.size(), std::vector<value_t>(cols.size(), 0));
	for (std::size_t j = 0; j < cols.size(); ++j) {
		value_t sign = 1;
		for (const hookprod::Simplex& face : complex.simplex(cols[j]).faces()) {
			m[row_of.at(face)][j] = sign == 1 ? 1 : p - 1;
			sign = -sign;
		}
	}
	return m;
}

inline index_t count_dim(const hookprod::FilteredComplex& complex, const std::vector<char>& mask,
                         index_t k) {
	index_t n = 0;
	for (index_t i = 0; i < complex.size(); ++i)
		if (mask[static_cast<std::size_t>(i)] && complex.simplex(i).dimension() == k) ++n;
	return n;
}

inline index_t cycle_dim(const hookprod::FilteredComplex& complex, const std::vector<char>& mask,
                         index_t k, value_t p) {
	return count_dim(complex, mask, k) - rank_dense(boundary_dense(complex, mask, k, p), p);
}

inline index_t betti(const hookprod::FilteredComplex& complex, const std::vector<char>& mask,
                     index_t k, value_t p) {
	return cycle_dim(complex, mask, k, p) -
	       rank_dense(boundary_dense(complex, mask, k + 1, p), p);
}

// rank(H_k(L) -> H_k(K)) = dim Z_k(L) - dim(Z_k(L) cap B_k(K)), computed from
// explicit cycle and boundary spans inside C_k(K).
inline index_t inclusion_rank_dense(const hookprod::FilteredComplex& complex,
                                    const std::vector<char>& mask_l,
                                    const std::vector<char>& mask_k, index_t k, value_t p) {
	std::map<hookprod::Simplex, std::size_t> chain_row;
	for (index_t i = 0; i < complex.size(); ++i)
		if (mask_k[static_cast<std::size_t>(i)] && complex.simplex(i).dimension() == k)
			chain_row.emplace(complex.simplex(i), chain_row.size());

	std::vector<index_t> l_cols;
	for (index_t i = 0; i < complex.size(); ++i)
		if (mask_l[static_cast<std::size_t>(i)] && complex.simplex(i).dimension() == k)
			l_cols.push_back(i);

	// kernel of the boundary of L, embedded into C_k(K) coordinates
	const DenseMatrix kernel_l =
	    kernel_dense(boundary_dense(complex, mask_l, k, p), l_cols.size(), p);
	DenseMatrix z_vectors;
	for (const auto& combo : kernel_l) {
		std::vector<value_t> v(chain_row.size(), 0);
		for (std::size_t j = 0; j < combo.size(); ++j)
			v[chain_row.at(complex.simplex(l_cols[j]))] = combo[j];
		z_vectors.push_back(std::move(v));
	}
	const DenseMatrix bd_k = boundary_dense(complex, mask_k, k + 1, p);
	DenseMatrix b_vectors;
	if (!bd_k.empty())
		for (std::size_t j = 0; j < bd_k[0].size(); ++j) {
			std::vector<value_t> v(chain_row.size(), 0);
			for (std::size_t r = 0; r < bd_k.size(); ++r) v[r] = bd_k[r][j];
			b_vectors.push_back(std::move(v));
		}

	auto as_matrix = [&](const std::vector<DenseMatrix*>& spans) {
		DenseMatrix m(chain_row.size());
		for (auto& row : m) row.clear();
		for (std::size_t r = 0; r < chain_row.size(); ++r)
			for (DenseMatrix* span : spans)
				for (const auto& v : *span) m[r].push_back(v[r]);
		return m;
	};
	DenseMatrix z_only = as_matrix({&z_vectors});
	DenseMatrix b_only = as_matrix({&b_vectors});
	DenseMatrix both = as_matrix({&z_vectors, &b_vectors});
	const index_t dim_z = rank_dense(z_only, p);
	const index_t dim_b = rank_dense(b_only, p);
	const index_t dim_sum = rank_dense(both, p);
	return dim_z - (dim_z + dim_b - dim_sum);
}

// Full diagram oracle: off-diagonal and essential multiplicities from the
// inclusion-rank formula, explicit diagonal multiplicities from cycle-count
// jumps.
inline hookprod::PersistenceDiagram diagram_oracle(const hookprod::FilteredComplex& complex,
                                                   hookprod::Function which, index_t k,
                                                   value_t p) {
	std::set<value_t> value_set = {0};
	for (index_t i = 0; i < complex.size(); ++i) value_set.insert(complex.value(i, which));
	const std::vector<value_t> thresholds(value_set.begin(), value_set.end());
	const index_t nt = static_cast<index_t>(thresholds.size());

	auto mask_at = [&](index_t ti) {
		std::vector<char> mask(static_cast<std::size_t>(complex.size()), 0);
		for (index_t i = 0; i < complex.size(); ++i)
			mask[static_cast<std::size_t>(i)] =
			    complex.value(i, which) <= thresholds[static_cast<std::size_t>(ti)];
		return mask;
	};
	std::vector<std::vector<char>> masks;
	for (index_t ti = 0; ti < nt; ++ti) masks.push_back(mask_at(ti));

	auto rank_between = [&](index_t a, index_t b) -> index_t {
		if (a < 0) return 0;
		return inclusion_rank_dense(complex, masks[static_cast<std::size_t>(a)],
		                            masks[static_cast<std::size_t>(b)], k, p);
	};

	hookprod::PersistenceDiagram diagram;
	std::vector<index_t> finite_births(static_cast<std::size_t>(nt), 0);
	for (index_t bi = 0; bi < nt; ++bi) {
		for (index_t di = bi + 1; di < nt; ++di) {
			index_t mult = rank_between(bi, di - 1) - rank_between(bi, di) -
			               rank_between(bi - 1, di - 1) + rank_between(bi - 1, di);
			finite_births[static_cast<std::size_t>(bi)] += mult;
			for (index_t c = 0; c < mult; ++c)
				diagram.points.push_back({thresholds[static_cast<std::size_t>(bi)],
				                          thresholds[static_cast<std::size_t>(di)]});
		}
		index_t essential = rank_between(bi, nt - 1) - rank_between(bi - 1, nt - 1);
		finite_births[static_cast<std::size_t>(bi)] += essential;
		for (index_t c = 0; c < essential; ++c)
			diagram.points.push_back(
			    {thresholds[static_cast<std::size_t>(bi)], hookprod::infinite_value});
	}
	// diagonal points: classes born and dead at the same value
	index_t previous_cycles = 0;
	for (index_t bi = 0; bi < nt; ++bi) {
		const index_t cycles = cycle_dim(complex, masks[static_cast<std::size_t>(bi)], k, p);
		const index_t born = cycles - previous_cycles;
		previous_cycles = cycles;
		for (index_t c = 0; c < born - finite_births[static_cast<std::size_t>(bi)]; ++c)
			diagram.points.push_back({thresholds[static_cast<std::size_t>(bi)],
			                          thresholds[static_cast<std::size_t>(bi)]});
	}
	std::sort(diagram.points.begin(), diagram.points.end());
	return diagram;
}

// --- random instance generators -------------------------------------------

inline hookprod::FilteredComplex random_complex(std::mt19937& rng, bool with_g,
                                                index_t max_simplices = 12) {
	std::uniform_int_distribution<index_t> nv_dist(2, 5);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	const index_t nv = nv_dist(rng);

	std::vector<std::vector<index_t>> simplices;
	for (index_t v = 0; v < nv; ++v) simplices.push_back({v});
	std::set<std::pair<index_t, index_t>> edges;
	for (index_t a = 0; a < nv; ++a)
		for (index_t b = a + 1; b < nv; ++b)
			if (coin(rng) < 0.6) {
				simplices.push_back({a, b});
				edges.emplace(a, b);
			}
	for (index_t a = 0; a < nv; ++a)
		for (index_t b = a + 1; b < nv; ++b)
			for (index_t c = b + 1; c < nv; ++c)
				if (edges.count({a, b}) && edges.count({a, c}) && edges.count({b, c}) &&
				    coin(rng) < 0.4)
					simplices.push_back({a, b, c});
	if (static_cast<index_t>(simplices.size()) > max_simplices)
		simplices.resize(static_cast<std::size_t>(max_simplices));
	// drop simplices whose faces were truncated away
	std::set<std::vector<index_t>> present;
	std::vector<std::vector<index_t>> closed;
	for (const auto& s : simplices) {
		bool ok = true;
		if (s.size() > 1)
			for (std::size_t skip = 0; skip < s.size() && ok; ++skip) {
				std::vector<index_t> face;
				for (std::size_t i = 0; i < s.size(); ++i)
					if (i != skip) face.push_back(s[i]);
				ok = present.count(face) > 0;
			}
		if (ok) {
			closed.push_back(s);
			present.insert(s);
		}
	}

	std::uniform_int_distribution<value_t> step(0, 3);
	auto assign = [&](std::map<std::vector<index_t>, value_t>& values) {
		for (const auto& s : closed) {
			value_t base = 0;
			if (s.size() > 1)
				for (std::size_t skip = 0; skip < s.size(); ++skip) {
					std::vector<index_t> face;
					for (std::size_t i = 0; i < s.size(); ++i)
						if (i != skip) face.push_back(s[i]);
					base = std::max(base, values.at(face));
				}
			values[s] = base + step(rng);
		}
	};
	std::map<std::vector<index_t>, value_t> f_of, g_of;
	assign(f_of);
	if (with_g) assign(g_of);

	std::vector<hookprod::Simplex> list;
	std::vector<value_t> fs, gs;
	for (const auto& s : closed) {
		list.push_back(hookprod::make_simplex(s));
		fs.push_back(f_of.at(s));
		if (with_g) gs.push_back(g_of.at(s));
	}
	return hookprod::FilteredComplex(std::move(list), std::move(fs), std::move(gs));
}

inline hookprod::PersistenceDiagram random_diagram(std::mt19937& rng, index_t max_points,
                                                   value_t max_value = 20) {
	std::uniform_int_distribution<index_t> count(0, max_points);
	std::uniform_int_distribution<value_t> val(0, max_value);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	hookprod::PersistenceDiagram pd;
	const index_t n = count(rng);
	for (index_t i = 0; i < n; ++i) {
		const value_t b = val(rng);
		const double kind = coin(rng);
		if (kind < 0.15)
			pd.points.push_back({b, hookprod::infinite_value});
		else if (kind < 0.3)
			pd.points.push_back({b, b});
		else
			pd.points.push_back({b, b + std::uniform_int_distribution<value_t>(0, max_value - b)(rng)});
	}
	return pd;
}

inline hookprod::Matching random_matching(std::mt19937& rng, index_t nf, index_t ng,
                                          value_t max_t = 20) {
	std::vector<index_t> fs(static_cast<std::size_t>(nf)), gs(static_cast<std::size_t>(ng));
	for (index_t i = 0; i < nf; ++i) fs[static_cast<std::size_t>(i)] = i;
	for (index_t j = 0; j < ng; ++j) gs[static_cast<std::size_t>(j)] = j;
	std::shuffle(fs.begin(), fs.end(), rng);
	std::shuffle(gs.begin(), gs.end(), rng);
	std::uniform_int_distribution<index_t> k_dist(0, std::min(nf, ng));
	std::uniform_int_distribution<value_t> t_dist(0, max_t);
	const index_t k = k_dist(rng);
	hookprod::Matching m;
	for (index_t i = 0; i < k; ++i)
		m.pairs.push_back({fs[static_cast<std::size_t>(i)], gs[static_cast<std::size_t>(i)]});
	for (index_t i = k; i < nf; ++i)
		m.f_to_diagonal.push_back({fs[static_cast<std::size_t>(i)], t_dist(rng)});
	for (index_t j = k; j < ng; ++j)
		m.diagonal_to_g.push_back({t_dist(rng), gs[static_cast<std::size_t>(j)]});
	return m;
}

inline hookprod::HookDecomposition random_hooks(std::mt19937& rng, index_t max_hooks,
                                                value_t max_corner = 20) {
	std::uniform_int_distribution<index_t> count(0, max_hooks);
	std::uniform_int_distribution<value_t> val(0, max_corner);
	std::uniform_real_distribution<double> coin(0.0, 1.0);
	hookprod::HookDecomposition decomposition;
	const index_t n = count(rng);
	for (index_t i = 0; i < n; ++i) {
		const hookprod::GridPoint p{val(rng), val(rng)};
		if (coin(rng) < 0.2) {
			decomposition.hooks.push_back(hookprod::make_free_quadrant(p));
			continue;
		}
		value_t dx = std::uniform_int_distribution<value_t>(0, max_corner - p.x)(rng);
		value_t dy = std::uniform_int_distribution<value_t>(0, max_corner - p.y)(rng);
		if (dx == 0 && dy == 0) dx = 1;
		decomposition.hooks.push_back(hookprod::make_hook(p, {p.x + dx, p.y + dy}));
	}
	return decomposition;
}

inline hookprod::GridPoint snug_box(const hookprod::HookDecomposition& decomposition) {
	value_t mx = 0, my = 0;
	for (const hookprod::HookModule& h : decomposition.hooks) {
		mx = std::max({mx, h.p.x, hookprod::is_finite(h.q.x) ? h.q.x : value_t(0)});
		my = std::max({my, h.p.y, hookprod::is_finite(h.q.y) ? h.q.y : value_t(0)});
	}
	return {mx + 2, my + 2};
}

}  // namespace oracles
