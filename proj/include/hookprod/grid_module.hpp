#pragma once

#include <vector>

#include "hookprod/hooks.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// Finite-window view of an N^2-graded module: the dimension at, and the rank
/// of the internal map between, every comparable pair of sample points. The
/// samples are the critical coordinates of the module plus 0 and the two last
/// box columns/rows; dims and ranks are step functions, constant between
/// consecutive samples, so arbitrary grid points are answered by flooring.
class GridModule {
public:
	static GridModule from_samples(GridPoint box, std::vector<value_t> xs,
	                               std::vector<value_t> ys, std::vector<value_t> critical_xs,
	                               std::vector<value_t> critical_ys,
	                               std::vector<std::int64_t> dims,
	                               std::vector<std::int64_t> ranks);

	GridPoint box() const { return box_; }
	const std::vector<value_t>& xs() const { return xs_; }
	const std::vector<value_t>& ys() const { return ys_; }
	const std::vector<value_t>& critical_xs() const { return critical_xs_; }
	const std::vector<value_t>& critical_ys() const { return critical_ys_; }
	index_t nx() const { return static_cast<index_t>(xs_.size()); }
	index_t ny() const { return static_cast<index_t>(ys_.size()); }

	std::int64_t dim_index(index_t ix, index_t iy) const {
		return dims_[static_cast<std::size_t>(ix * ny() + iy)];
	}
	std::int64_t rank_index(index_t ix, index_t iy, index_t jx, index_t jy) const {
		index_t n = nx() * ny();
		return ranks_[static_cast<std::size_t>((ix * ny() + iy) * n + jx * ny() + jy)];
	}

	std::int64_t dim_at(GridPoint r) const;
	/// Rank of the internal map r -> s; requires r <= s coordinate-wise.
	std::int64_t rank_at(GridPoint r, GridPoint s) const;

	/// True when the last row and column replicate their predecessors, i.e.
	/// every dims/ranks pattern is unchanged by clamping coordinates to box-1.
	bool tail_stable() const;

	std::int64_t total_critical_dim() const;

	/// CSV dump `r1,r2,s1,s2,rank` over all comparable sample pairs; the
	/// r = s rows carry the dimensions.
	std::string to_csv() const;

private:
	GridPoint box_;
	std::vector<value_t> xs_, ys_;
	std::vector<value_t> critical_xs_, critical_ys_;
	std::vector<std::int64_t> dims_;
	std::vector<std::int64_t> ranks_;

	index_t floor_x(value_t v) const;
	index_t floor_y(value_t v) const;
};

/// Window evaluation of a hook multiset: dims count the hooks whose support
/// contains the point, ranks count the hooks containing both endpoints.
GridModule evaluate_hooks(const HookDecomposition& decomposition, GridPoint box);

/// Recovers the unique hook multiset whose evaluation matches the module, with
/// corners drawn from sample points and q = infinity for legs persisting to
/// the box edge. Throws UnstableTail if the box does not exceed all changes,
/// and NotHookDecomposable when no nonnegative integer combination of hook
/// rank invariants reproduces the module.
HookDecomposition hook_decompose(const GridModule& module);

/// True iff the two modules have equal hook decompositions (equivalently,
/// equal rank invariants; the class is rank-determined).
bool iso_hook_decomposable(const GridModule& a, const GridModule& b);

/// Step-function equality of the two rank invariants on the union of sample
/// grids, with tail-stable extension beyond each box.
bool equal_rank_invariant(const GridModule& a, const GridModule& b);

}  // namespace hookprod
