#include "hookprod/grid_module.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hookprod/errors.hpp"

namespace hookprod {

namespace {

index_t floor_sample(const std::vector<value_t>& samples, value_t v) {
	auto it = std::upper_bound(samples.begin(), samples.end(), v);
	if (it == samples.begin()) throw Error("coordinate below the sample range");
	return static_cast<index_t>(std::distance(samples.begin(), it)) - 1;
}

std::vector<value_t> merge_sorted(const std::vector<value_t>& a, const std::vector<value_t>& b) {
	std::vector<value_t> out;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

}  // namespace

GridModule GridModule::from_samples(GridPoint box, std::vector<value_t> xs,
                                    std::vector<value_t> ys, std::vector<value_t> critical_xs,
                                    std::vector<value_t> critical_ys,
                                    std::vector<std::int64_t> dims,
                                    std::vector<std::int64_t> ranks) {
	GridModule m;
	m.box_ = box;
	m.xs_ = std::move(xs);
	m.ys_ = std::move(ys);
	m.critical_xs_ = std::move(critical_xs);
	m.critical_ys_ = std::move(critical_ys);
	m.dims_ = std::move(dims);
	m.ranks_ = std::move(ranks);

	if (box.x < 1 || box.y < 1) throw Error("box coordinates must be >= 1");
	for (auto [samples, bound] : {std::pair(&m.xs_, box.x), std::pair(&m.ys_, box.y)}) {
		if (!std::is_sorted(samples->begin(), samples->end()) ||
		    std::adjacent_find(samples->begin(), samples->end()) != samples->end())
			throw Error("sample coordinates must be sorted and distinct");
		if (samples->empty() || samples->front() != 0 || samples->back() != bound ||
		    samples->size() < 2 || (*samples)[samples->size() - 2] != bound - 1)
			throw Error("samples must contain 0 and the last two box columns/rows");
	}
	const index_t n = m.nx() * m.ny();
	if (static_cast<index_t>(m.dims_.size()) != n ||
	    static_cast<index_t>(m.ranks_.size()) != n * n)
		throw Error("dims/ranks size mismatch");

	// Rank invariant sanity: diagonal equals dims, ranks bounded by endpoint
	// dims and monotone under one-step composition.
	for (index_t ix = 0; ix < m.nx(); ++ix)
		for (index_t iy = 0; iy < m.ny(); ++iy) {
			if (m.dim_index(ix, iy) < 0) throw Error("negative dimension");
			if (m.rank_index(ix, iy, ix, iy) != m.dim_index(ix, iy))
				throw Error("rank(r, r) must equal dims(r)");
			for (index_t jx = ix; jx < m.nx(); ++jx)
				for (index_t jy = iy; jy < m.ny(); ++jy) {
					std::int64_t rk = m.rank_index(ix, iy, jx, jy);
					if (rk < 0 || rk > std::min(m.dim_index(ix, iy), m.dim_index(jx, jy)))
						throw Error("rank exceeds endpoint dimension");
					if (jx > ix && m.rank_index(ix + 1, iy, jx, jy) < rk)
						throw Error("rank invariant not monotone");
					if (jy > iy && m.rank_index(ix, iy + 1, jx, jy) < rk)
						throw Error("rank invariant not monotone");
					if (jx > ix && m.rank_index(ix, iy, jx - 1, jy) < rk)
						throw Error("rank invariant not monotone");
					if (jy > iy && m.rank_index(ix, iy, jx, jy - 1) < rk)
						throw Error("rank invariant not monotone");
				}
		}
	return m;
}

std::int64_t GridModule::dim_at(GridPoint r) const {
	return dim_index(floor_x(r.x), floor_y(r.y));
}

std::int64_t GridModule::rank_at(GridPoint r, GridPoint s) const {
	if (!poset_leq(r, s)) throw Error("rank_at requires r <= s");
	return rank_index(floor_x(r.x), floor_y(r.y), floor_x(s.x), floor_y(s.y));
}

index_t GridModule::floor_x(value_t v) const { return floor_sample(xs_, v); }
index_t GridModule::floor_y(value_t v) const { return floor_sample(ys_, v); }

bool GridModule::tail_stable() const {
	auto cx = [&](index_t i) { return std::min(i, nx() - 2); };
	auto cy = [&](index_t i) { return std::min(i, ny() - 2); };
	for (index_t ix = 0; ix < nx(); ++ix)
		for (index_t iy = 0; iy < ny(); ++iy)
			for (index_t jx = ix; jx < nx(); ++jx)
				for (index_t jy = iy; jy < ny(); ++jy)
					if (rank_index(ix, iy, jx, jy) !=
					    rank_index(cx(ix), cy(iy), cx(jx), cy(jy)))
						return false;
	return true;
}

std::int64_t GridModule::total_critical_dim() const {
	std::int64_t total = 0;
	for (value_t x : critical_xs_)
		for (value_t y : critical_ys_) total += dim_at({x, y});
	return total;
}

std::string GridModule::to_csv() const {
	std::string out = "r1,r2,s1,s2,rank\n";
	for (index_t ix = 0; ix < nx(); ++ix)
		for (index_t iy = 0; iy < ny(); ++iy)
			for (index_t jx = ix; jx < nx(); ++jx)
				for (index_t jy = iy; jy < ny(); ++jy)
					out += std::to_string(xs_[static_cast<std::size_t>(ix)]) + ',' +
					       std::to_string(ys_[static_cast<std::size_t>(iy)]) + ',' +
					       std::to_string(xs_[static_cast<std::size_t>(jx)]) + ',' +
					       std::to_string(ys_[static_cast<std::size_t>(jy)]) + ',' +
					       std::to_string(rank_index(ix, iy, jx, jy)) + '\n';
	return out;
}

GridModule evaluate_hooks(const HookDecomposition& decomposition, GridPoint box) {
	if (box.x < 1 || box.y < 1) throw Error("box coordinates must be >= 1");
	std::set<value_t> xset = {0, box.x - 1, box.x};
	std::set<value_t> yset = {0, box.y - 1, box.y};
	std::set<value_t> crit_x, crit_y;
	for (const HookModule& h : decomposition.hooks) {
		h.validate();
		for (value_t v : {h.p.x, h.q.x})
			if (is_finite(v) && v <= box.x) {
				xset.insert(v);
				crit_x.insert(v);
			}
		for (value_t v : {h.p.y, h.q.y})
			if (is_finite(v) && v <= box.y) {
				yset.insert(v);
				crit_y.insert(v);
			}
	}
	std::vector<value_t> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
	const index_t nx = static_cast<index_t>(xs.size()), ny = static_cast<index_t>(ys.size());
	const index_t n = nx * ny;
	std::vector<std::int64_t> dims(static_cast<std::size_t>(n), 0);
	std::vector<std::int64_t> ranks(static_cast<std::size_t>(n * n), 0);
	for (const HookModule& h : decomposition.hooks) {
		std::vector<char> alive(static_cast<std::size_t>(n));
		for (index_t ix = 0; ix < nx; ++ix)
			for (index_t iy = 0; iy < ny; ++iy)
				alive[static_cast<std::size_t>(ix * ny + iy)] = h.contains(
				    {xs[static_cast<std::size_t>(ix)], ys[static_cast<std::size_t>(iy)]});
		for (index_t i = 0; i < n; ++i) {
			if (!alive[static_cast<std::size_t>(i)]) continue;
			++dims[static_cast<std::size_t>(i)];
			index_t ix = i / ny, iy = i % ny;
			for (index_t jx = ix; jx < nx; ++jx)
				for (index_t jy = iy; jy < ny; ++jy)
					if (alive[static_cast<std::size_t>(jx * ny + jy)])
						++ranks[static_cast<std::size_t>(i * n + jx * ny + jy)];
		}
	}
	return GridModule::from_samples(box, std::move(xs), std::move(ys),
	                                std::vector<value_t>(crit_x.begin(), crit_x.end()),
	                                std::vector<value_t>(crit_y.begin(), crit_y.end()),
	                                std::move(dims), std::move(ranks));
}

HookDecomposition hook_decompose(const GridModule& module) {
	if (!module.tail_stable())
		throw UnstableTail("dims or ranks still change at the box edge");

	const index_t nx = module.nx(), ny = module.ny();
	// Moebius difference of the rank invariant in the first argument, taken at
	// the sample lattice point p; zero off-lattice terms drop out.
	auto first_arg_difference = [&](index_t px, index_t py, index_t sx, index_t sy) {
		std::int64_t v = module.rank_index(px, py, sx, sy);
		if (px > 0) v -= module.rank_index(px - 1, py, sx, sy);
		if (py > 0) v -= module.rank_index(px, py - 1, sx, sy);
		if (px > 0 && py > 0) v += module.rank_index(px - 1, py - 1, sx, sy);
		return v;
	};

	std::map<HookModule, std::int64_t> multiplicity;
	std::vector<std::int64_t> w(static_cast<std::size_t>(nx * ny));
	for (index_t px = 0; px + 1 < nx; ++px)
		for (index_t py = 0; py + 1 < ny; ++py) {
			const GridPoint p{module.xs()[static_cast<std::size_t>(px)],
			                  module.ys()[static_cast<std::size_t>(py)]};
			// Quadrant multiplicity: the difference survives at the top sample.
			std::int64_t quadrant = first_arg_difference(px, py, nx - 1, ny - 1);
			if (quadrant < 0)
				throw NotHookDecomposable("negative multiplicity at corner (" +
				                          std::to_string(p.x) + "," + std::to_string(p.y) + ")");
			if (quadrant > 0) multiplicity[make_free_quadrant(p)] += quadrant;

			// Cumulative count of finite corners q <= s among hooks born at p.
			const std::int64_t at_p = first_arg_difference(px, py, px, py);
			auto w_at = [&](index_t sx, index_t sy) -> std::int64_t {
				if (sx < 0 || sy < 0) return 0;
				if (sx < px || sy < py) return 0;
				return w[static_cast<std::size_t>(sx * ny + sy)];
			};
			for (index_t sx = px; sx < nx; ++sx)
				for (index_t sy = py; sy < ny; ++sy)
					w[static_cast<std::size_t>(sx * ny + sy)] =
					    at_p - first_arg_difference(px, py, sx, sy);
			for (index_t qx = px; qx + 1 < nx; ++qx)
				for (index_t qy = py; qy + 1 < ny; ++qy) {
					if (qx == px && qy == py) continue;
					std::int64_t m = w_at(qx, qy) - w_at(qx - 1, qy) - w_at(qx, qy - 1) +
					                 w_at(qx - 1, qy - 1);
					if (m < 0)
						throw NotHookDecomposable("negative multiplicity at corner pair");
					if (m == 0) continue;
					HookModule hook = make_hook(
					    p, {module.xs()[static_cast<std::size_t>(qx)],
					        module.ys()[static_cast<std::size_t>(qy)]});
					multiplicity[hook] += m;
				}
		}

	HookDecomposition result;
	for (const auto& [hook, count] : multiplicity)
		for (std::int64_t i = 0; i < count; ++i) result.hooks.push_back(hook);

	// The inversion is exact only inside the span of hook rank invariants;
	// re-evaluating certifies membership.
	if (!equal_rank_invariant(module, evaluate_hooks(result, module.box())))
		throw NotHookDecomposable("rank invariant is not a hook combination");
	return result;
}

bool iso_hook_decomposable(const GridModule& a, const GridModule& b) {
	return multiset_equal(hook_decompose(a), hook_decompose(b));
}

bool equal_rank_invariant(const GridModule& a, const GridModule& b) {
	const std::vector<value_t> xs = merge_sorted(a.xs(), b.xs());
	const std::vector<value_t> ys = merge_sorted(a.ys(), b.ys());
	for (std::size_t ix = 0; ix < xs.size(); ++ix)
		for (std::size_t iy = 0; iy < ys.size(); ++iy)
			for (std::size_t jx = ix; jx < xs.size(); ++jx)
				for (std::size_t jy = iy; jy < ys.size(); ++jy) {
					GridPoint r{xs[ix], ys[iy]}, s{xs[jx], ys[jy]};
					if (a.rank_at(r, s) != b.rank_at(r, s)) return false;
				}
	return true;
}

}  // namespace hookprod
