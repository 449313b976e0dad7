#pragma once

#include <string>
#include <vector>

#include "hookprod/types.hpp"

namespace hookprod {

/// Interval module supported on {r >= p, r not >= q}. q may have infinite
/// coordinates; when any coordinate of q is infinite no grid point dominates
/// q, so the support is the full quadrant above p. The canonical free
/// quadrant has both coordinates infinite; q with exactly one infinite
/// coordinate is admitted only for closure under the file format.
struct HookModule {
	GridPoint p;
	GridPoint q;

	bool contains(GridPoint r) const {
		return poset_leq(p, r) && !(r.x >= q.x && r.y >= q.y);
	}
	bool is_free_quadrant() const { return !is_finite(q.x) && !is_finite(q.y); }
	bool has_mixed_infinity() const { return is_finite(q.x) != is_finite(q.y); }
	bool has_empty_support() const { return p == q; }

	void validate() const;  // throws SyntaxError on malformed corners

	friend bool operator==(const HookModule&, const HookModule&) = default;
	friend auto operator<=>(const HookModule&, const HookModule&) = default;
};

HookModule make_hook(GridPoint p, GridPoint q);
HookModule make_free_quadrant(GridPoint p);

/// Finite multiset of hooks with nonempty support.
struct HookDecomposition {
	std::vector<HookModule> hooks;

	index_t size() const { return static_cast<index_t>(hooks.size()); }
	std::vector<HookModule> sorted_hooks() const;
	index_t dimension_at(GridPoint r) const;

	friend bool multiset_equal(const HookDecomposition& a, const HookDecomposition& b);
};

/// CSV with header `p1,p2,q1,q2`; `inf` allowed in q1/q2 (both `inf` encodes
/// a free quadrant). Rows written in canonical sorted order.
std::string write_hooks_csv(const HookDecomposition& decomposition);
HookDecomposition parse_hooks_csv(const std::string& text);

}  // namespace hookprod
