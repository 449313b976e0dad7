#include <doctest.h>

#include <random>

#include "hookprod/bipersistence.hpp"
#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/product.hpp"
#include "oracles.hpp"

using namespace hookprod;

namespace {

const PersistenceDiagram worked_example{{{0, 1}, {100, 101}}};

HookDecomposition worked_target() {
	return {{make_hook({0, 100}, {1, 101}), make_hook({100, 0}, {101, 1})}};
}

HookDecomposition worked_identity_product() {
	return {{make_hook({0, 0}, {1, 1}), make_hook({100, 100}, {101, 101})}};
}

}  // namespace

TEST_CASE("bottleneck distance on the stated examples") {
	SUBCASE("identical diagrams match by the identity at cost 0") {
		const BottleneckResult r = bottleneck(worked_example, worked_example);
		CHECK(r.value == Rat::of(0));
		Matching identity;
		identity.pairs = {{0, 0}, {1, 1}};
		CHECK(r.matching == identity);
	}
	SUBCASE("a lone point projects to the diagonal") {
		const BottleneckResult r = bottleneck({{{0, 1}}}, {});
		CHECK(r.value == Rat::of(1, 2));
		REQUIRE(r.matching.f_to_diagonal.size() == 1);
		CHECK(r.matching.f_to_diagonal[0].t == 0);
	}
	SUBCASE("direct match beats double projection") {
		CHECK(bottleneck({{{0, 10}}}, {{{1, 10}}}).value == Rat::of(1));
	}
	SUBCASE("mismatched essential counts are infinitely far") {
		CHECK(bottleneck({{{0, infinite_value}}}, {}).value.is_infinite());
	}
	SUBCASE("essential classes pair by sorted births") {
		const PersistenceDiagram a{{{0, infinite_value}, {10, infinite_value}}};
		const PersistenceDiagram b{{{2, infinite_value}, {11, infinite_value}}};
		CHECK(bottleneck(a, b).value == Rat::of(2));
	}
}

TEST_CASE("bottleneck behaves like a metric on random diagrams") {
	std::mt19937 rng(6174);
	for (int trial = 0; trial < 25; ++trial) {
		const PersistenceDiagram a = oracles::random_diagram(rng, 4, 10);
		const PersistenceDiagram b = oracles::random_diagram(rng, 4, 10);
		const PersistenceDiagram c = oracles::random_diagram(rng, 4, 10);
		const Rat ab = bottleneck(a, b).value;
		const Rat ba = bottleneck(b, a).value;
		CHECK(ab == ba);
		CHECK(bottleneck(a, a).value == Rat::of(0));
		const Rat ac = bottleneck(a, c).value;
		const Rat cb = bottleneck(c, b).value;
		if (!ac.is_infinite() && !cb.is_infinite() && !ab.is_infinite())
			CHECK(ab <= Rat::of(ac.num * cb.den + cb.num * ac.den, ac.den * cb.den));
	}
}

TEST_CASE("interleaving distance on the stated examples") {
	SUBCASE("any module against itself is 0") {
		CHECK(interleaving_exact(worked_target(), worked_target(), 5) == 0);
		CHECK(interleaving_exact(HookDecomposition{}, HookDecomposition{}, 5) == 0);
	}
	SUBCASE("a unit hook dies one step from the zero module") {
		CHECK(interleaving_exact({{make_hook({0, 0}, {1, 1})}}, {}, 5) == 1);
	}
	SUBCASE("worked example: identity product sits at 1, swap product at 0") {
		CHECK(interleaving_exact(worked_identity_product(), worked_target(), 5) == 1);
		CHECK(interleaving_exact(worked_target(), worked_target(), 5) == 0);
	}
	SUBCASE("free quadrants never die") {
		CHECK(interleaving_exact({{make_free_quadrant({0, 0})}}, {}, 8) == std::nullopt);
	}
	SUBCASE("grid module inputs are decomposed first") {
		const GridPoint box{103, 103};
		CHECK(interleaving_exact(evaluate_hooks(worked_identity_product(), box),
		                         evaluate_hooks(worked_target(), box), 5) == 1);
	}
}

TEST_CASE("interleaving between shifted copies needs nonzero maps") {
	// diagonal translates of a free quadrant: the only candidate morphisms are
	// scalars, and the composites must equal the identity shifts
	for (value_t k : {value_t(1), value_t(2), value_t(5)}) {
		const HookDecomposition a{{make_free_quadrant({0, 0})}};
		const HookDecomposition b{{make_free_quadrant({k, k})}};
		CHECK(interleaving_exact(a, b, 10) == k);
	}
	// translated bands behave like shifted one-parameter bars
	const HookDecomposition band_a{{make_hook({0, 0}, {4, 0})}};
	const HookDecomposition band_b{{make_hook({1, 0}, {5, 0})}};
	CHECK(interleaving_exact(band_a, band_b, 10) == 1);
	// and against a doubled copy of itself the identity cannot be matched
	HookDecomposition doubled = band_a;
	doubled.hooks.push_back(band_a.hooks[0]);
	CHECK(interleaving_exact(band_a, doubled, 10) == 2);
}

TEST_CASE("bottleneck witnesses are valid and achieve the reported value") {
	std::mt19937 rng(1729);
	for (int trial = 0; trial < 40; ++trial) {
		const PersistenceDiagram a = oracles::random_diagram(rng, 5, 12);
		const PersistenceDiagram b = oracles::random_diagram(rng, 5, 12);
		const BottleneckResult r = bottleneck(a, b);
		if (r.value.is_infinite()) continue;
		CHECK_NOTHROW(r.matching.validate(a, b));
		// doubled cost of the witness: infinity norm between matched points,
		// half the persistence for projections (the integer t only names the
		// diagonal copy, the metric projection is at (b+d)/2 exactly)
		value_t worst = 0;
		for (const auto& e : r.matching.pairs) {
			const DiagramPoint fp = a.points[static_cast<std::size_t>(e.f_index)];
			const DiagramPoint gp = b.points[static_cast<std::size_t>(e.g_index)];
			if (!is_finite(fp.death) || !is_finite(gp.death))
				worst = std::max(worst, 2 * std::abs(fp.birth - gp.birth));
			else
				worst = std::max(worst, 2 * std::max(std::abs(fp.birth - gp.birth),
				                                     std::abs(fp.death - gp.death)));
		}
		for (const auto& e : r.matching.f_to_diagonal)
			worst = std::max(
			    worst, a.points[static_cast<std::size_t>(e.f_index)].persistence());
		for (const auto& e : r.matching.diagonal_to_g)
			worst = std::max(
			    worst, b.points[static_cast<std::size_t>(e.g_index)].persistence());
		CHECK(Rat::of(worst, 2) == r.value);
	}
}

TEST_CASE("interleaving is symmetric and triangular on tiny instances") {
	std::mt19937 rng(3141);
	std::vector<HookDecomposition> modules;
	for (int i = 0; i < 6; ++i) modules.push_back(oracles::random_hooks(rng, 2, 6));
	std::vector<std::vector<std::optional<value_t>>> d(modules.size());
	for (std::size_t i = 0; i < modules.size(); ++i) {
		d[i].resize(modules.size());
		for (std::size_t j = 0; j < modules.size(); ++j)
			d[i][j] = interleaving_exact(modules[i], modules[j], 20);
	}
	for (std::size_t i = 0; i < modules.size(); ++i) {
		CHECK(d[i][i] == 0);
		for (std::size_t j = 0; j < modules.size(); ++j) {
			CHECK(d[i][j] == d[j][i]);
			for (std::size_t k = 0; k < modules.size(); ++k)
				if (d[i][k] && d[k][j] && d[i][j]) CHECK(*d[i][j] <= *d[i][k] + *d[k][j]);
		}
	}
}

TEST_CASE("interleaving budget is enforced") {
	HookDecomposition big;
	for (value_t i = 0; i < 13; ++i) big.hooks.push_back(make_hook({0, 0}, {1, 1}));
	CHECK_THROWS_AS(interleaving_exact(big, {}, 3), BudgetExceeded);
	// equal multisets short-circuit before the budget gate
	CHECK(interleaving_exact(big, big, 3) == 0);
}

TEST_CASE("line restrictions read barcodes off the rank invariant") {
	const GridModule target = evaluate_hooks(worked_target(), {103, 103});
	const LineSample diagonal{{0, 0}, {1, 1}};
	const PersistenceDiagram bars = restrict_to_line(target, diagonal);
	const PersistenceDiagram expected{{{100, 101}, {100, 101}}};
	CHECK(multiset_equal(bars, expected));

	const GridModule quadrant = evaluate_hooks({{make_free_quadrant({2, 0})}}, {5, 5});
	const PersistenceDiagram rays = restrict_to_line(quadrant, diagonal);
	REQUIRE(rays.size() == 1);
	CHECK(rays.points[0] == DiagramPoint{2, infinite_value});
}

TEST_CASE("matching distance estimate on the stated examples") {
	const GridPoint box{103, 103};
	const GridModule target = evaluate_hooks(worked_target(), box);
	const GridModule ident = evaluate_hooks(worked_identity_product(), box);
	SUBCASE("equal modules score 0") {
		CHECK(matching_distance_estimate(target, target,
		                                 default_line_samples(target, target)) == Rat::of(0));
	}
	SUBCASE("zero against zero scores 0") {
		const GridModule zero = evaluate_hooks({}, {2, 2});
		CHECK(matching_distance_estimate(zero, zero, default_line_samples(zero, zero)) ==
		      Rat::of(0));
	}
	SUBCASE("the diagonal line separates the worked example") {
		const Rat estimate =
		    matching_distance_estimate(ident, target, default_line_samples(ident, target));
		CHECK(estimate > Rat::of(0));
		CHECK(estimate <= Rat::of(1));  // lower bound for the exact distance 1
	}
	SUBCASE("directions must be positive with minimal component 1") {
		CHECK_THROWS_AS(restrict_to_line(target, LineSample{{0, 0}, {2, 3}}), Error);
		CHECK_THROWS_AS(restrict_to_line(target, LineSample{{0, 0}, {0, 1}}), Error);
	}
}

TEST_CASE("estimate lower-bounds the exact distance on random pairs") {
	std::mt19937 rng(2718);
	int both_ran = 0;
	for (int trial = 0; trial < 40; ++trial) {
		const HookDecomposition a = oracles::random_hooks(rng, 3, 8);
		const HookDecomposition b = oracles::random_hooks(rng, 3, 8);
		const GridPoint box{12, 12};
		std::optional<value_t> exact;
		try {
			exact = interleaving_exact(a, b, 15);
		} catch (const BudgetExceeded&) {
			continue;
		}
		if (!exact) continue;
		const GridModule ga = evaluate_hooks(a, box);
		const GridModule gb = evaluate_hooks(b, box);
		const Rat estimate = matching_distance_estimate(ga, gb, default_line_samples(ga, gb));
		CHECK(estimate <= Rat::of(*exact));
		++both_ran;
	}
	CHECK(both_ran > 5);
}

TEST_CASE("searching the worked example finds the swap at 0") {
	const FilteredComplex c = parse_complex(
	    "simplex 0  f=0 g=100\nsimplex 1  f=0 g=100\nsimplex 2  f=0 g=100\n"
	    "simplex 0 1  f=0 g=100\nsimplex 0 2  f=0 g=100\nsimplex 1 2  f=0 g=100\n"
	    "simplex 0 1 2  f=1 g=101\n"
	    "simplex 3  f=100 g=0\nsimplex 4  f=100 g=0\nsimplex 5  f=100 g=0\n"
	    "simplex 3 4  f=100 g=0\nsimplex 3 5  f=100 g=0\nsimplex 4 5  f=100 g=0\n"
	    "simplex 3 4 5  f=101 g=1\n");
	const auto [pd_f, pd_g] = axis_barcodes(c, 1, 2);
	const GridModule target = grid_module_of_pair(c, 1, 2);

	SUBCASE("exact objective") {
		SearchConfig config;
		config.objective = Objective::exact_interleaving;
		const SearchReport report = gamma_bar_search(pd_f, pd_g, target, config);
		CHECK(report.best_value == Rat::of(0));
		Matching swap;
		swap.pairs = {{0, 1}, {1, 0}};
		CHECK(report.best_matching == swap);
		CHECK(report.objective == Objective::exact_interleaving);
		CHECK(report.evaluations > 2);
		// the minimizer beats the bottleneck matching, which scores 1
		CHECK(interleaving_exact(
		          hooks_of_product(build_product(pd_f, pd_g, bottleneck(pd_f, pd_g).matching)),
		          hook_decompose(target), 5) == 1);
	}
	SUBCASE("matching objective agrees here") {
		SearchConfig config;
		config.objective = Objective::matching_distance_estimate;
		const SearchReport report = gamma_bar_search(pd_f, pd_g, target, config);
		CHECK(report.best_value == Rat::of(0));
		Matching swap;
		swap.pairs = {{0, 1}, {1, 0}};
		CHECK(report.best_matching == swap);
	}
}

TEST_CASE("searching a self-matched cycle keeps the identity") {
	// one cycle with f = g, killed two steps later: the target is the single
	// hook <(0,0),(2,2)> and the identity matching reproduces it exactly
	const FilteredComplex c = parse_complex(
	    "simplex 0  f=0 g=0\nsimplex 1  f=0 g=0\nsimplex 2  f=0 g=0\n"
	    "simplex 0 1  f=0 g=0\nsimplex 0 2  f=0 g=0\nsimplex 1 2  f=0 g=0\n"
	    "simplex 0 1 2  f=2 g=2\n");
	const auto [pd_f, pd_g] = axis_barcodes(c, 1, 2);
	REQUIRE(multiset_equal(pd_f, PersistenceDiagram{{{0, 2}}}));
	const GridModule target = grid_module_of_pair(c, 1, 2);
	CHECK(multiset_equal(hook_decompose(target),
	                     HookDecomposition{{make_hook({0, 0}, {2, 2})}}));
	const SearchReport report = gamma_bar_search(pd_f, pd_g, target, {});
	CHECK(report.best_value == Rat::of(0));
	Matching identity;
	identity.pairs = {{0, 0}};
	CHECK(report.best_matching == identity);
	CHECK(report.objective == Objective::exact_interleaving);  // auto picked exact
}

TEST_CASE("empty diagrams against the zero module") {
	const GridModule zero = evaluate_hooks({}, {2, 2});
	const SearchReport report = gamma_bar_search({}, {}, zero, {});
	CHECK(report.best_value == Rat::of(0));
	CHECK(report.best_matching.entry_count() == 0);
	CHECK(report.evaluations == 1);
}

TEST_CASE("enumeration bound raises a budget error with a partial report") {
	PersistenceDiagram big;
	for (value_t i = 0; i < 9; ++i) big.points.push_back({i, i + 1});
	const GridModule zero = evaluate_hooks({}, {2, 2});
	CHECK_THROWS_AS(gamma_bar_search(big, big, zero, {}), BudgetExceeded);
}
