#include "hookprod/product.hpp"

#include <algorithm>

#include "hookprod/errors.hpp"
#include "hookprod/persistence.hpp"

namespace hookprod {

std::int64_t MatchedProduct::dimension_at(GridPoint point) const {
	std::int64_t dim = 0;
	for (const Generator& gen : generators) {
		if (point.x < gen.b || point.y < gen.b2) continue;
		const value_t i = point.x - gen.b, j = point.y - gen.b2;
		if (i < gen.a || j < gen.c) ++dim;
	}
	return dim;
}

MatchedProduct build_product(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g,
                             const Matching& matching) {
	MatchedProduct product;
	for (const auto& [fp, gp] : matched_pairs(pd_f, pd_g, matching)) {
		if (fp.is_diagonal() && gp.is_diagonal()) continue;
		MatchedProduct::Generator gen;
		gen.b = fp.birth;
		gen.b2 = gp.birth;
		gen.a = fp.persistence();
		gen.c = gp.persistence();
		gen.from_f = fp;
		gen.from_g = gp;
		if (gen.a == 0 && gen.c == 0) {
			++product.dropped_zero_generators;
			continue;
		}
		product.generators.push_back(gen);
	}
	std::sort(product.generators.begin(), product.generators.end(),
	          [](const MatchedProduct::Generator& x, const MatchedProduct::Generator& y) {
		          return std::tuple(x.b, x.b2, x.a, x.c, x.from_f, x.from_g) <
		                 std::tuple(y.b, y.b2, y.a, y.c, y.from_f, y.from_g);
	          });
	return product;
}

HookDecomposition hooks_of_product(const MatchedProduct& product) {
	HookDecomposition decomposition;
	decomposition.hooks.reserve(product.generators.size());
	for (const auto& gen : product.generators) {
		const GridPoint p{gen.b, gen.b2};
		if (!is_finite(gen.a) || !is_finite(gen.c))
			decomposition.hooks.push_back(make_free_quadrant(p));
		else
			decomposition.hooks.push_back(make_hook(p, {gen.b + gen.a, gen.b2 + gen.c}));
	}
	return decomposition;
}

Reconstruction reconstruct_from_hooks(const HookDecomposition& decomposition) {
	Reconstruction result;
	for (const HookModule& hook : decomposition.sorted_hooks()) {
		hook.validate();
		if (hook.has_mixed_infinity())
			throw UnsupportedHook("hook corner with exactly one infinite coordinate");
		const index_t i = result.pd_f.size();
		if (hook.is_free_quadrant()) {
			result.pd_f.points.push_back({hook.p.x, infinite_value});
			result.pd_g.points.push_back({hook.p.y, infinite_value});
		} else {
			result.pd_f.points.push_back({hook.p.x, hook.q.x});
			result.pd_g.points.push_back({hook.p.y, hook.q.y});
		}
		result.matching.pairs.push_back({i, i});
	}
	return result;
}

}  // namespace hookprod
