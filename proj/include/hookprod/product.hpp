#pragma once

#include <vector>

#include "hookprod/diagram.hpp"
#include "hookprod/hooks.hpp"
#include "hookprod/matching.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// Bigraded module built from two diagrams and a matching: one generator of
/// bidegree (b, b') per matched pair with at least one off-diagonal end,
/// annihilated after (a, c) = (d - b, d' - b') steps. x acts on the first
/// component only and y on the second, so the generator's cyclic summand is
/// nonzero at offset (i, j) iff i < a or j < c.
struct MatchedProduct {
	struct Generator {
		value_t b;   // birth of the f point
		value_t b2;  // birth of the matched g point
		value_t a;   // relation exponent d - b (infinite_value if essential)
		value_t c;   // relation exponent d' - b'
		DiagramPoint from_f, from_g;

		friend bool operator==(const Generator&, const Generator&) = default;
	};

	std::vector<Generator> generators;
	// Matched pairs with a = c = 0 present the zero module and are dropped.
	index_t dropped_zero_generators = 0;

	index_t size() const { return static_cast<index_t>(generators.size()); }

	/// Direct reading of the presentation: number of generators alive at (u, v).
	std::int64_t dimension_at(GridPoint point) const;
};

MatchedProduct build_product(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g,
                             const Matching& matching);

/// One hook summand per generator: <(b, b'), (b + a, b' + c)> for finite
/// exponents, the free quadrant when either exponent is infinite.
HookDecomposition hooks_of_product(const MatchedProduct& product);

struct Reconstruction {
	PersistenceDiagram pd_f;
	PersistenceDiagram pd_g;
	Matching matching;
};

/// Reads a hook decomposition back as a matched pair of diagrams: hook
/// <(p1, p2), (q1, q2)> yields f point (p1, q1) matched with g point (p2, q2),
/// a free quadrant yields two matched essential points. Throws UnsupportedHook
/// on q with exactly one infinite coordinate.
Reconstruction reconstruct_from_hooks(const HookDecomposition& decomposition);

}  // namespace hookprod
