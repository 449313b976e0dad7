"""Hook products of one-parameter persistence modules.

Thin wrapper around the C++ core. Values are exact: filtration values are
naturals, distances are fractions, INF marks unbounded deaths and hook legs.
"""

from fractions import Fraction
import math

from ._hookprod import (
    INF,
    Error,
    FilteredComplex,
    GridModule,
    Matching,
    axis_barcodes,
    build_product,
    compute_diagram,
    evaluate_hooks,
    gamma_bar_search,
    grid_module_of_pair,
    hook_decompose,
    interleaving_exact,
    iso_hook_decomposable,
    make_complex,
    parse_complex,
    product_hooks,
    reconstruct_from_hooks,
    render_supports_svg,
    run_cli,
)
from . import _hookprod


def _as_fraction(pair):
    num, den = pair
    return Fraction(num, den) if den else math.inf


def bottleneck(pd_a, pd_b):
    """Bottleneck distance and a witnessing matching."""
    value, matching = _hookprod.bottleneck(pd_a, pd_b)
    return _as_fraction(value), matching


def matching_distance_estimate(a, b):
    """Line-sampled lower bound for the interleaving distance."""
    return _as_fraction(_hookprod.matching_distance_estimate(a, b))


__all__ = [
    "INF",
    "Error",
    "FilteredComplex",
    "GridModule",
    "Matching",
    "axis_barcodes",
    "bottleneck",
    "build_product",
    "compute_diagram",
    "evaluate_hooks",
    "gamma_bar_search",
    "grid_module_of_pair",
    "hook_decompose",
    "interleaving_exact",
    "iso_hook_decomposable",
    "make_complex",
    "matching_distance_estimate",
    "parse_complex",
    "product_hooks",
    "reconstruct_from_hooks",
    "render_supports_svg",
    "run_cli",
]
