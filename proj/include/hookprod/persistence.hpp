#pragma once

#include <vector>

#include "hookprod/complex.hpp"
#include "hookprod/diagram.hpp"
#include "hookprod/matching.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// Persistence diagram of the sublevel filtration of one function, in
/// homology degree `degree` with F_prime coefficients. Simplices are ordered
/// by (value, dimension, input position); zero-persistence pairs are kept as
/// explicit diagonal points; essential classes get death = infinite_value.
PersistenceDiagram compute_diagram(const FilteredComplex& complex, Function which,
                                   index_t degree, value_t prime);

/// Rank of the map H_degree(sublevel_pair(r)) -> H_degree(sublevel_pair(s))
/// induced by inclusion, for r <= s coordinate-wise. Computed from a single
/// reduction with the simplices of the smaller sublevel ordered first.
index_t inclusion_rank(const FilteredComplex& complex, index_t degree, value_t prime,
                       GridPoint r, GridPoint s);

/// All matched pairs of diagram points described by the matching, including
/// diagonal-to-diagonal ones. Fresh diagonal copies appear as (t, t).
std::vector<std::pair<DiagramPoint, DiagramPoint>> matched_pairs(
    const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g, const Matching& matching);

/// The pruned generating set of the f side: every matched point except the
/// diagonal points whose image lies on the diagonal. Off-diagonal points are
/// always retained. The result has the same cardinality as the g-side set
/// obtained from the inverse matching.
std::vector<DiagramPoint> retained_generators(const PersistenceDiagram& pd_f,
                                              const PersistenceDiagram& pd_g,
                                              const Matching& matching);

namespace detail {

/// Standard column reduction pairing over an ordered simplex list (faces must
/// precede cofaces). Returns, per order position j, the order position of the
/// class its column kills, or -1 for a creator column.
std::vector<index_t> reduction_pairs(const FilteredComplex& complex,
                                     const std::vector<index_t>& order, value_t prime);

}  // namespace detail

}  // namespace hookprod
