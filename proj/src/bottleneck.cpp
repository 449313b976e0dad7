#include <algorithm>
#include <set>

#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"

namespace hookprod {

namespace {

// Bipartite matching by augmenting paths (left = finite points of A plus one
// proxy per finite point of B, right = finite points of B plus proxies of A).
struct BipartiteMatcher {
	index_t n_left, n_right;
	std::vector<std::vector<index_t>> adjacent;
	std::vector<index_t> match_left, match_right;

	explicit BipartiteMatcher(index_t nl, index_t nr)
	    : n_left(nl), n_right(nr), adjacent(static_cast<std::size_t>(nl)) {}

	bool augment(index_t u, std::vector<char>& visited) {
		for (index_t v : adjacent[static_cast<std::size_t>(u)]) {
			if (visited[static_cast<std::size_t>(v)]) continue;
			visited[static_cast<std::size_t>(v)] = 1;
			if (match_right[static_cast<std::size_t>(v)] < 0 ||
			    augment(match_right[static_cast<std::size_t>(v)], visited)) {
				match_left[static_cast<std::size_t>(u)] = v;
				match_right[static_cast<std::size_t>(v)] = u;
				return true;
			}
		}
		return false;
	}

	index_t run() {
		match_left.assign(static_cast<std::size_t>(n_left), -1);
		match_right.assign(static_cast<std::size_t>(n_right), -1);
		index_t size = 0;
		for (index_t u = 0; u < n_left; ++u) {
			std::vector<char> visited(static_cast<std::size_t>(n_right), 0);
			if (augment(u, visited)) ++size;
		}
		return size;
	}
};

// Doubled infinity-norm distance between finite points.
value_t doubled_distance(const DiagramPoint& a, const DiagramPoint& b) {
	return 2 * std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

value_t doubled_diagonal_distance(const DiagramPoint& a) { return a.death - a.birth; }

}  // namespace

BottleneckResult bottleneck(const PersistenceDiagram& pd_a, const PersistenceDiagram& pd_b) {
	std::vector<index_t> finite_a, finite_b, essential_a, essential_b;
	for (index_t i = 0; i < pd_a.size(); ++i)
		(is_finite(pd_a.points[static_cast<std::size_t>(i)].death) ? finite_a : essential_a)
		    .push_back(i);
	for (index_t j = 0; j < pd_b.size(); ++j)
		(is_finite(pd_b.points[static_cast<std::size_t>(j)].death) ? finite_b : essential_b)
		    .push_back(j);

	BottleneckResult result;

	// Essential classes can only match each other; pairing sorted births is
	// optimal for the sup norm.
	if (essential_a.size() != essential_b.size()) {
		result.value = Rat::infinity();
		return result;
	}
	auto birth_of_a = [&](index_t i) { return pd_a.points[static_cast<std::size_t>(i)].birth; };
	auto birth_of_b = [&](index_t j) { return pd_b.points[static_cast<std::size_t>(j)].birth; };
	std::sort(essential_a.begin(), essential_a.end(),
	          [&](index_t x, index_t y) { return birth_of_a(x) < birth_of_a(y); });
	std::sort(essential_b.begin(), essential_b.end(),
	          [&](index_t x, index_t y) { return birth_of_b(x) < birth_of_b(y); });
	value_t doubled_essential_cost = 0;
	for (std::size_t k = 0; k < essential_a.size(); ++k) {
		doubled_essential_cost =
		    std::max(doubled_essential_cost,
		             2 * std::abs(birth_of_a(essential_a[k]) - birth_of_b(essential_b[k])));
		result.matching.pairs.push_back({essential_a[k], essential_b[k]});
	}

	const index_t n = static_cast<index_t>(finite_a.size());
	const index_t m = static_cast<index_t>(finite_b.size());
	const auto point_a = [&](index_t u) -> const DiagramPoint& {
		return pd_a.points[static_cast<std::size_t>(finite_a[static_cast<std::size_t>(u)])];
	};
	const auto point_b = [&](index_t v) -> const DiagramPoint& {
		return pd_b.points[static_cast<std::size_t>(finite_b[static_cast<std::size_t>(v)])];
	};

	std::set<value_t> candidate_costs = {doubled_essential_cost};
	for (index_t u = 0; u < n; ++u) candidate_costs.insert(doubled_diagonal_distance(point_a(u)));
	for (index_t v = 0; v < m; ++v) candidate_costs.insert(doubled_diagonal_distance(point_b(v)));
	for (index_t u = 0; u < n; ++u)
		for (index_t v = 0; v < m; ++v) candidate_costs.insert(doubled_distance(point_a(u), point_b(v)));

	// Left: finite A points, then one proxy per finite B point.
	// Right: finite B points, then one proxy per finite A point.
	auto feasible = [&](value_t cost, BipartiteMatcher* keep) {
		BipartiteMatcher matcher(n + m, m + n);
		for (index_t u = 0; u < n; ++u) {
			for (index_t v = 0; v < m; ++v)
				if (doubled_distance(point_a(u), point_b(v)) <= cost)
					matcher.adjacent[static_cast<std::size_t>(u)].push_back(v);
			if (doubled_diagonal_distance(point_a(u)) <= cost)
				for (index_t k = 0; k < n; ++k)
					matcher.adjacent[static_cast<std::size_t>(u)].push_back(m + k);
		}
		for (index_t j = 0; j < m; ++j) {
			for (index_t v = 0; v < m; ++v)
				if (doubled_diagonal_distance(point_b(v)) <= cost)
					matcher.adjacent[static_cast<std::size_t>(n + j)].push_back(v);
			for (index_t k = 0; k < n; ++k)
				matcher.adjacent[static_cast<std::size_t>(n + j)].push_back(m + k);
		}
		bool ok = matcher.run() == n + m;
		if (ok && keep) *keep = std::move(matcher);
		return ok;
	};

	// Smallest feasible candidate cost; feasibility is monotone.
	std::vector<value_t> costs(candidate_costs.begin(), candidate_costs.end());
	std::size_t lo = 0, hi = costs.size() - 1;
	while (lo < hi) {
		std::size_t mid = (lo + hi) / 2;
		if (feasible(costs[mid], nullptr))
			hi = mid;
		else
			lo = mid + 1;
	}
	BipartiteMatcher matcher(0, 0);
	feasible(costs[lo], &matcher);

	for (index_t u = 0; u < n; ++u) {
		index_t v = matcher.match_left[static_cast<std::size_t>(u)];
		if (v < m) {
			result.matching.pairs.push_back(
			    {finite_a[static_cast<std::size_t>(u)], finite_b[static_cast<std::size_t>(v)]});
		} else {
			const DiagramPoint& p = point_a(u);
			result.matching.f_to_diagonal.push_back(
			    {finite_a[static_cast<std::size_t>(u)], (p.birth + p.death) / 2});
		}
	}
	for (index_t j = 0; j < m; ++j) {
		index_t v = matcher.match_left[static_cast<std::size_t>(n + j)];
		if (v < m) {
			const DiagramPoint& p = point_b(v);
			result.matching.diagonal_to_g.push_back(
			    {(p.birth + p.death) / 2, finite_b[static_cast<std::size_t>(v)]});
		}
	}

	result.value = Rat::of(std::max(costs[lo], doubled_essential_cost), 2);
	return result;
}

}  // namespace hookprod
