#include <algorithm>
#include <numeric>
#include <set>

#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/fp.hpp"

namespace hookprod {

namespace {

// Shared coordinate lattice for one eps. Every scalar field appearing in the
// interleaving equations (the morphism candidates, the shifted supports, the
// 2*eps internal maps) is constant on the cells of this lattice, so checking
// the equations at the cell representatives decides them on all of N^2.
struct Lattice {
	std::vector<value_t> xs, ys;

	index_t nx() const { return static_cast<index_t>(xs.size()); }
	index_t ny() const { return static_cast<index_t>(ys.size()); }
	index_t cells() const { return nx() * ny(); }

	static index_t floor_of(const std::vector<value_t>& coords, value_t v) {
		auto it = std::upper_bound(coords.begin(), coords.end(), v);
		return static_cast<index_t>(std::distance(coords.begin(), it)) - 1;
	}
	index_t cell_of(GridPoint r) const {
		return floor_of(xs, r.x) * ny() + floor_of(ys, r.y);
	}
	GridPoint point(index_t cell) const {
		return {xs[static_cast<std::size_t>(cell / ny())],
		        ys[static_cast<std::size_t>(cell % ny())]};
	}
};

Lattice build_lattice(const HookDecomposition& a, const HookDecomposition& b, value_t eps) {
	std::set<value_t> xset = {0}, yset = {0};
	value_t max_x = 0, max_y = 0;
	auto add = [&](std::set<value_t>& dst, value_t& max_c, value_t v) {
		if (!is_finite(v)) return;
		max_c = std::max(max_c, v);
		for (value_t shift : {value_t(0), eps, 2 * eps})
			if (v - shift >= 0) dst.insert(v - shift);
	};
	for (const HookDecomposition* decomposition : {&a, &b})
		for (const HookModule& h : decomposition->hooks) {
			add(xset, max_x, h.p.x);
			add(xset, max_x, h.q.x);
			add(yset, max_y, h.p.y);
			add(yset, max_y, h.q.y);
		}
	xset.insert(max_x + 1);
	yset.insert(max_y + 1);
	Lattice lattice;
	lattice.xs.assign(xset.begin(), xset.end());
	lattice.ys.assign(yset.begin(), yset.end());
	return lattice;
}

// Scalar structure of Hom(src_i, dst_j(eps)) for all hook pairs: each scalar
// field is constant on comparability components of the support overlap and
// forced to zero on components from which the shifted target support escapes
// the source support (upward) or vice versa (downward). Remaining components
// are the free variables.
struct HomSpace {
	index_t n_src = 0, n_dst = 0;
	index_t n_vars = 0;
	// variable id per (src hook, dst hook, lattice cell); -1 where zero
	std::vector<std::vector<std::vector<index_t>>> var;

	index_t var_at(index_t i, index_t j, index_t cell) const {
		return var[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
		          [static_cast<std::size_t>(cell)];
	}
};

HomSpace compute_hom(const HookDecomposition& src, const HookDecomposition& dst, value_t eps,
                     const Lattice& lattice) {
	const index_t cells = lattice.cells();
	const index_t ny = lattice.ny();
	HomSpace hom;
	hom.n_src = src.size();
	hom.n_dst = dst.size();
	hom.var.assign(static_cast<std::size_t>(hom.n_src),
	               std::vector<std::vector<index_t>>(
	                   static_cast<std::size_t>(hom.n_dst),
	                   std::vector<index_t>(static_cast<std::size_t>(cells), -1)));

	std::vector<char> in_src(static_cast<std::size_t>(cells));
	std::vector<char> in_dst(static_cast<std::size_t>(cells));
	std::vector<char> bad(static_cast<std::size_t>(cells));
	std::vector<index_t> component(static_cast<std::size_t>(cells));

	for (index_t i = 0; i < hom.n_src; ++i)
		for (index_t j = 0; j < hom.n_dst; ++j) {
			const HookModule& hi = src.hooks[static_cast<std::size_t>(i)];
			const HookModule& hj = dst.hooks[static_cast<std::size_t>(j)];
			for (index_t c = 0; c < cells; ++c) {
				GridPoint r = lattice.point(c);
				in_src[static_cast<std::size_t>(c)] = hi.contains(r);
				in_dst[static_cast<std::size_t>(c)] =
				    hj.contains({r.x + eps, r.y + eps});
			}
			// escape(c) = target alive but source not; a nonzero scalar cannot
			// survive above (or start below) such a cell.
			for (index_t c = 0; c < cells; ++c)
				bad[static_cast<std::size_t>(c)] =
				    in_dst[static_cast<std::size_t>(c)] && !in_src[static_cast<std::size_t>(c)];
			// suffix OR: bad above
			for (index_t ix = lattice.nx() - 1; ix >= 0; --ix)
				for (index_t iy = ny - 1; iy >= 0; --iy) {
					index_t c = ix * ny + iy;
					if (ix + 1 < lattice.nx())
						bad[static_cast<std::size_t>(c)] |=
						    bad[static_cast<std::size_t>(c + ny)];
					if (iy + 1 < ny)
						bad[static_cast<std::size_t>(c)] |= bad[static_cast<std::size_t>(c + 1)];
				}
			// prefix OR of the downward escapes, folded in
			std::vector<char> down(static_cast<std::size_t>(cells));
			for (index_t c = 0; c < cells; ++c)
				down[static_cast<std::size_t>(c)] =
				    in_src[static_cast<std::size_t>(c)] && !in_dst[static_cast<std::size_t>(c)];
			for (index_t ix = 0; ix < lattice.nx(); ++ix)
				for (index_t iy = 0; iy < ny; ++iy) {
					index_t c = ix * ny + iy;
					if (ix > 0)
						down[static_cast<std::size_t>(c)] |=
						    down[static_cast<std::size_t>(c - ny)];
					if (iy > 0)
						down[static_cast<std::size_t>(c)] |=
						    down[static_cast<std::size_t>(c - 1)];
					bad[static_cast<std::size_t>(c)] |= down[static_cast<std::size_t>(c)];
				}

			// comparability components of the overlap
			std::iota(component.begin(), component.end(), 0);
			auto find = [&](index_t c) {
				while (component[static_cast<std::size_t>(c)] != c)
					c = component[static_cast<std::size_t>(c)] =
					    component[static_cast<std::size_t>(component[static_cast<std::size_t>(c)])];
				return c;
			};
			std::vector<index_t> overlap;
			for (index_t c = 0; c < cells; ++c)
				if (in_src[static_cast<std::size_t>(c)] && in_dst[static_cast<std::size_t>(c)])
					overlap.push_back(c);
			auto cell_max = [&](index_t c) -> GridPoint {
				index_t ix = c / ny, iy = c % ny;
				value_t mx = ix + 1 < lattice.nx()
				                 ? lattice.xs[static_cast<std::size_t>(ix + 1)] - 1
				                 : infinite_value;
				value_t my = iy + 1 < ny ? lattice.ys[static_cast<std::size_t>(iy + 1)] - 1
				                         : infinite_value;
				return {mx, my};
			};
			for (std::size_t s = 0; s < overlap.size(); ++s)
				for (std::size_t t = s + 1; t < overlap.size(); ++t) {
					GridPoint lo_s = lattice.point(overlap[s]), hi_s = cell_max(overlap[s]);
					GridPoint lo_t = lattice.point(overlap[t]), hi_t = cell_max(overlap[t]);
					if (poset_leq(lo_s, hi_t) || poset_leq(lo_t, hi_s)) {
						index_t rs = find(overlap[s]), rt = find(overlap[t]);
						if (rs != rt) component[static_cast<std::size_t>(rs)] = rt;
					}
				}
			// one variable per all-good component
			std::vector<char> component_bad(static_cast<std::size_t>(cells), 0);
			for (index_t c : overlap)
				if (bad[static_cast<std::size_t>(c)])
					component_bad[static_cast<std::size_t>(find(c))] = 1;
			std::vector<index_t> var_of(static_cast<std::size_t>(cells), -1);
			for (index_t c : overlap) {
				index_t root = find(c);
				if (component_bad[static_cast<std::size_t>(root)]) continue;
				if (var_of[static_cast<std::size_t>(root)] < 0)
					var_of[static_cast<std::size_t>(root)] = hom.n_vars++;
				hom.var[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
				       [static_cast<std::size_t>(c)] = var_of[static_cast<std::size_t>(root)];
			}
		}
	return hom;
}

// Incremental row reduction over F_p for consistency checking.
struct LinearSystem {
	value_t p;
	index_t n_vars;
	std::vector<std::vector<value_t>> rows;  // reduced rows, leading column distinct

	bool add(std::vector<value_t> row) {  // returns false on inconsistency
		for (const auto& basis : rows) {
			index_t lead = -1;
			for (index_t k = 0; k < n_vars; ++k)
				if (basis[static_cast<std::size_t>(k)]) {
					lead = k;
					break;
				}
			if (lead < 0) continue;
			value_t c = row[static_cast<std::size_t>(lead)];
			if (!c) continue;
			value_t factor =
			    (p - (c * mod_inverse(basis[static_cast<std::size_t>(lead)], p)) % p) % p;
			for (index_t k = 0; k <= n_vars; ++k)
				row[static_cast<std::size_t>(k)] =
				    (row[static_cast<std::size_t>(k)] + factor * basis[static_cast<std::size_t>(k)]) %
				    p;
		}
		bool all_zero = true;
		for (index_t k = 0; k < n_vars; ++k)
			if (row[static_cast<std::size_t>(k)]) {
				all_zero = false;
				break;
			}
		if (all_zero) return row[static_cast<std::size_t>(n_vars)] == 0;
		rows.push_back(std::move(row));
		return true;
	}
};

struct InterleavingProblem {
	const HookDecomposition& a;
	const HookDecomposition& b;
	value_t eps;
	value_t p;
	Lattice lattice;
	HomSpace phi;  // a -> b(eps)
	HomSpace psi;  // b -> a(eps)

	// alive flags per hook per cell at offsets 0, eps, 2*eps
	std::vector<std::vector<char>> alive_a0, alive_a2;
	std::vector<std::vector<char>> alive_b0, alive_b2;
};

std::vector<std::vector<char>> alive_table(const HookDecomposition& decomposition,
                                           const Lattice& lattice, value_t offset) {
	std::vector<std::vector<char>> table(static_cast<std::size_t>(decomposition.size()));
	for (index_t i = 0; i < decomposition.size(); ++i) {
		auto& row = table[static_cast<std::size_t>(i)];
		row.resize(static_cast<std::size_t>(lattice.cells()));
		for (index_t c = 0; c < lattice.cells(); ++c) {
			GridPoint r = lattice.point(c);
			row[static_cast<std::size_t>(c)] =
			    decomposition.hooks[static_cast<std::size_t>(i)].contains(
			        {r.x + offset, r.y + offset});
		}
	}
	return table;
}

// Collects the composite equations, linear in the `solved` side once the
// `fixed` side is assigned: fixed: src -> dst(eps) at the cell itself, solved:
// dst -> src(eps) looked up one eps later. The composites must equal the
// 2*eps internal shift of src.
bool consistent_given(const InterleavingProblem& problem, const HomSpace& fixed_hom,
                      const HomSpace& solved_hom, const std::vector<value_t>& fixed_values,
                      const std::vector<std::vector<char>>& alive_src0,
                      const std::vector<std::vector<char>>& alive_src2, LinearSystem& system) {
	const Lattice& lattice = problem.lattice;
	const index_t ny = lattice.ny();
	std::vector<index_t> shift_cell(static_cast<std::size_t>(lattice.cells()));
	for (index_t c = 0; c < lattice.cells(); ++c) {
		GridPoint r = lattice.point(c);
		shift_cell[static_cast<std::size_t>(c)] =
		    Lattice::floor_of(lattice.xs, r.x + problem.eps) * ny +
		    Lattice::floor_of(lattice.ys, r.y + problem.eps);
	}
	std::vector<value_t> row;
	for (index_t c = 0; c < lattice.cells(); ++c) {
		const index_t c_eps = shift_cell[static_cast<std::size_t>(c)];
		for (index_t i = 0; i < fixed_hom.n_src; ++i) {
			if (!alive_src0[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) continue;
			for (index_t i2 = 0; i2 < fixed_hom.n_src; ++i2) {
				if (!alive_src2[static_cast<std::size_t>(i2)][static_cast<std::size_t>(c)])
					continue;
				row.assign(static_cast<std::size_t>(solved_hom.n_vars) + 1, 0);
				bool nonzero = false;
				for (index_t j = 0; j < fixed_hom.n_dst; ++j) {
					index_t fixed_var = fixed_hom.var_at(i, j, c);
					if (fixed_var < 0 || !fixed_values[static_cast<std::size_t>(fixed_var)])
						continue;
					index_t solved_var = solved_hom.var_at(j, i2, c_eps);
					if (solved_var < 0) continue;
					row[static_cast<std::size_t>(solved_var)] =
					    (row[static_cast<std::size_t>(solved_var)] +
					     fixed_values[static_cast<std::size_t>(fixed_var)]) %
					    problem.p;
					nonzero = true;
				}
				value_t rhs = (i == i2) ? 1 : 0;  // identity on the surviving summand
				row[static_cast<std::size_t>(solved_hom.n_vars)] = rhs;
				if (!nonzero && rhs == 0) continue;
				if (!system.add(row)) return false;
			}
		}
	}
	return true;
}

bool exists_interleaving(const HookDecomposition& a, const HookDecomposition& b, value_t eps,
                         const InterleavingConfig& config) {
	InterleavingProblem problem{a,  b,  eps, config.modulus, build_lattice(a, b, eps),
	                            {}, {}, {},  {},             {},
	                            {}};
	problem.phi = compute_hom(a, b, eps, problem.lattice);
	problem.psi = compute_hom(b, a, eps, problem.lattice);
	problem.alive_a0 = alive_table(a, problem.lattice, 0);
	problem.alive_a2 = alive_table(a, problem.lattice, 2 * eps);
	problem.alive_b0 = alive_table(b, problem.lattice, 0);
	problem.alive_b2 = alive_table(b, problem.lattice, 2 * eps);

	// Enumerate the smaller morphism space; the other side is linear.
	const bool enumerate_phi = problem.phi.n_vars <= problem.psi.n_vars;
	const HomSpace& fixed_hom = enumerate_phi ? problem.phi : problem.psi;
	const HomSpace& solved_hom = enumerate_phi ? problem.psi : problem.phi;
	const auto& alive_src0 = enumerate_phi ? problem.alive_a0 : problem.alive_b0;
	const auto& alive_src2 = enumerate_phi ? problem.alive_a2 : problem.alive_b2;
	const auto& alive_dst0 = enumerate_phi ? problem.alive_b0 : problem.alive_a0;
	const auto& alive_dst2 = enumerate_phi ? problem.alive_b2 : problem.alive_a2;

	double combinations = 1;
	for (index_t v = 0; v < fixed_hom.n_vars; ++v) {
		combinations *= static_cast<double>(config.modulus);
		if (combinations > static_cast<double>(config.max_enum))
			throw BudgetExceeded("morphism space too large to enumerate (" +
			                     std::to_string(fixed_hom.n_vars) + " free coefficients)");
	}

	std::vector<value_t> fixed_values(static_cast<std::size_t>(fixed_hom.n_vars), 0);
	const std::int64_t total = static_cast<std::int64_t>(combinations);
	for (std::int64_t assignment = 0; assignment < total; ++assignment) {
		std::int64_t rest = assignment;
		for (index_t v = 0; v < fixed_hom.n_vars; ++v) {
			fixed_values[static_cast<std::size_t>(v)] = rest % config.modulus;
			rest /= config.modulus;
		}
		LinearSystem system{config.modulus, solved_hom.n_vars, {}};
		// fixed side composed after solved side must equal dst's shift, and
		// solved side after fixed side must equal src's shift.
		if (!consistent_given(problem, fixed_hom, solved_hom, fixed_values, alive_src0,
		                      alive_src2, system))
			continue;
		// Second family: solved(c) then fixed(c + eps) equals dst's 2*eps map.
		// Rows are linear in the solved side as well.
		const Lattice& lattice = problem.lattice;
		const index_t ny = lattice.ny();
		bool ok = true;
		std::vector<value_t> row;
		for (index_t c = 0; c < lattice.cells() && ok; ++c) {
			GridPoint r = lattice.point(c);
			index_t c_eps = Lattice::floor_of(lattice.xs, r.x + eps) * ny +
			                Lattice::floor_of(lattice.ys, r.y + eps);
			for (index_t j = 0; j < solved_hom.n_src && ok; ++j) {
				if (!alive_dst0[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)])
					continue;
				for (index_t j2 = 0; j2 < solved_hom.n_src; ++j2) {
					if (!alive_dst2[static_cast<std::size_t>(j2)][static_cast<std::size_t>(c)])
						continue;
					row.assign(static_cast<std::size_t>(solved_hom.n_vars) + 1, 0);
					bool nonzero = false;
					for (index_t i = 0; i < solved_hom.n_dst; ++i) {
						index_t solved_var = solved_hom.var_at(j, i, c);
						if (solved_var < 0) continue;
						index_t fixed_var = fixed_hom.var_at(i, j2, c_eps);
						if (fixed_var < 0 ||
						    !fixed_values[static_cast<std::size_t>(fixed_var)])
							continue;
						row[static_cast<std::size_t>(solved_var)] =
						    (row[static_cast<std::size_t>(solved_var)] +
						     fixed_values[static_cast<std::size_t>(fixed_var)]) %
						    problem.p;
						nonzero = true;
					}
					value_t rhs = (j == j2) ? 1 : 0;
					row[static_cast<std::size_t>(solved_hom.n_vars)] = rhs;
					if (!nonzero && rhs == 0) continue;
					if (!system.add(row)) {
						ok = false;
						break;
					}
				}
			}
		}
		if (ok) return true;
	}
	return false;
}

std::int64_t critical_dimension(const HookDecomposition& decomposition) {
	std::set<value_t> xs, ys;
	for (const HookModule& h : decomposition.hooks) {
		xs.insert(h.p.x);
		ys.insert(h.p.y);
		if (is_finite(h.q.x)) xs.insert(h.q.x);
		if (is_finite(h.q.y)) ys.insert(h.q.y);
	}
	std::int64_t total = 0;
	for (value_t x : xs)
		for (value_t y : ys) total += decomposition.dimension_at({x, y});
	return total;
}

}  // namespace

std::optional<value_t> interleaving_exact(const HookDecomposition& a, const HookDecomposition& b,
                                          value_t max_eps, const InterleavingConfig& config) {
	if (max_eps < 0) return std::nullopt;
	// Hook-decomposable modules are isomorphic exactly when their multisets
	// agree, which settles eps = 0 without a map search.
	if (multiset_equal(a, b)) return 0;
	for (const HookDecomposition* decomposition : {&a, &b})
		if (critical_dimension(*decomposition) > config.dim_budget)
			throw BudgetExceeded("total dimension over the critical grid exceeds the budget of " +
			                     std::to_string(config.dim_budget));
	if (max_eps == 0) return std::nullopt;

	// eps-interleavings persist under enlarging eps, so binary search works.
	if (!exists_interleaving(a, b, max_eps, config)) return std::nullopt;
	value_t lo = 1, hi = max_eps;
	while (lo < hi) {
		value_t mid = lo + (hi - lo) / 2;
		if (exists_interleaving(a, b, mid, config))
			hi = mid;
		else
			lo = mid + 1;
	}
	return lo;
}

std::optional<value_t> interleaving_exact(const GridModule& a, const GridModule& b,
                                          value_t max_eps, const InterleavingConfig& config) {
	return interleaving_exact(hook_decompose(a), hook_decompose(b), max_eps, config);
}

}  // namespace hookprod
