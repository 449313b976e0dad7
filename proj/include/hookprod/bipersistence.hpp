#pragma once

#include <utility>

#include "hookprod/complex.hpp"
#include "hookprod/diagram.hpp"
#include "hookprod/grid_module.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// Default truncation box: max critical coordinate + 2 per axis, so bounded
/// features stay distinguishable from infinite legs at the box edge.
GridPoint default_box(const FilteredComplex& complex);

/// The biparameter module of the pair (f, g) in homology degree `degree`,
/// materialized on the compressed critical grid of the given box. Dimensions
/// and ranks come from one inclusion-rank reduction per comparable sample
/// pair.
GridModule grid_module_of_pair(const FilteredComplex& complex, index_t degree, value_t prime,
                               GridPoint box);
GridModule grid_module_of_pair(const FilteredComplex& complex, index_t degree, value_t prime);

/// The two axis diagrams (PD of f alone, PD of g alone).
std::pair<PersistenceDiagram, PersistenceDiagram> axis_barcodes(const FilteredComplex& complex,
                                                                index_t degree, value_t prime);

}  // namespace hookprod
