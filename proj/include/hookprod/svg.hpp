#pragma once

#include <string>
#include <vector>

#include "hookprod/hooks.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// Renders the support regions of one or two hook multisets over the
/// truncation box as an SVG document. Integer arithmetic throughout, so the
/// output is byte-identical across runs. Overlay colors are fixed per input
/// index.
std::string render_supports_svg(const std::vector<HookDecomposition>& layers, GridPoint box);

}  // namespace hookprod
