#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookprod/diagram.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/grid_module.hpp"
#include "hookprod/matching.hpp"
#include "hookprod/rational.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

struct BottleneckResult {
	Rat value;
	Matching matching;  // witnessing matching; diagonal targets use t = (b+d)/2
};

/// Optimal infinity-norm bottleneck distance between two finite diagrams,
/// with diagonal projections allowed. Essential points must match essential
/// points; the value is infinite when their counts differ.
BottleneckResult bottleneck(const PersistenceDiagram& pd_a, const PersistenceDiagram& pd_b);

struct InterleavingConfig {
	std::int64_t dim_budget = 12;   // max total dimension over the critical grid
	std::int64_t max_enum = 4096;   // max morphism-space candidates enumerated
	value_t modulus = 2;            // coefficient field for the map search
};

/// Smallest integer eps <= max_eps admitting an eps-interleaving (a pair of
/// degree-(eps, eps) morphisms whose composites are the 2*eps internal
/// shifts), or nullopt when none exists up to max_eps. Modules enter as hook
/// decompositions; the GridModule overloads decompose first, so they require
/// hook-decomposable inputs.
std::optional<value_t> interleaving_exact(const HookDecomposition& a, const HookDecomposition& b,
                                          value_t max_eps, const InterleavingConfig& config = {});
std::optional<value_t> interleaving_exact(const GridModule& a, const GridModule& b,
                                          value_t max_eps, const InterleavingConfig& config = {});

/// A line with positive integer direction; the smaller direction component
/// must be 1 so that the bottleneck distance along the line, measured in
/// steps of `direction`, is a certified lower bound for the interleaving
/// distance.
struct LineSample {
	GridPoint base;       // intercept on an axis
	GridPoint direction;  // both components >= 1, min component == 1
};

std::vector<LineSample> default_line_samples(const GridModule& a, const GridModule& b);

/// Barcode of the module restricted to the line, in line-parameter units.
PersistenceDiagram restrict_to_line(const GridModule& module, const LineSample& line);

/// Max over the sampled lines of the weighted bottleneck distance between the
/// two restrictions: a lower bound for the interleaving distance.
Rat matching_distance_estimate(const GridModule& a, const GridModule& b,
                               const std::vector<LineSample>& lines);

enum class Objective { automatic, exact_interleaving, matching_distance_estimate };

struct SearchConfig {
	Objective objective = Objective::automatic;
	value_t prime = 2;
	std::int64_t enumeration_bound = 8;    // max off-diagonal points per side
	std::int64_t max_candidates = 200000;  // cap on enumerated bijections
	std::optional<value_t> max_eps;        // default: max box coordinate
	InterleavingConfig interleaving;
};

struct SearchReport {
	Matching best_matching;
	Rat best_value = Rat::infinity();
	Objective objective = Objective::exact_interleaving;
	std::int64_t evaluations = 0;
	// candidates whose exact score exceeded the per-candidate budget and could
	// only be bounded below; never the reported minimizer unless all are
	std::int64_t unscored = 0;
	bool truncated = false;  // candidate list hit max_candidates
};

/// Enumerates candidate bijections (all off/off pairings plus diagonal
/// projections with t restricted to the midpoint projection and the target's
/// critical values), scores each against the target, and returns the
/// minimizer; ties break toward the lexicographically smallest encoding.
/// Throws BudgetExceeded carrying a partial report when the exact objective is
/// requested but infeasible.
SearchReport gamma_bar_search(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g,
                              const GridModule& target, const SearchConfig& config = {});

struct BudgetExceededWithReport : BudgetExceeded {
	SearchReport partial;
	BudgetExceededWithReport(const std::string& what, SearchReport partial_report)
	    : BudgetExceeded(what), partial(std::move(partial_report)) {}
};

std::string objective_name(Objective objective);

}  // namespace hookprod
