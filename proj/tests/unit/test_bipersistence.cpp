#include <doctest.h>

#include <random>

#include "hookprod/bipersistence.hpp"
#include "hookprod/errors.hpp"
#include "oracles.hpp"

using namespace hookprod;

namespace {

FilteredComplex twin_triangles() {
	return parse_complex(
	    "simplex 0  f=0 g=100\nsimplex 1  f=0 g=100\nsimplex 2  f=0 g=100\n"
	    "simplex 0 1  f=0 g=100\nsimplex 0 2  f=0 g=100\nsimplex 1 2  f=0 g=100\n"
	    "simplex 0 1 2  f=1 g=101\n"
	    "simplex 3  f=100 g=0\nsimplex 4  f=100 g=0\nsimplex 5  f=100 g=0\n"
	    "simplex 3 4  f=100 g=0\nsimplex 3 5  f=100 g=0\nsimplex 4 5  f=100 g=0\n"
	    "simplex 3 4 5  f=101 g=1\n");
}

}  // namespace

TEST_CASE("pair module of the twin triangles") {
	const FilteredComplex c = twin_triangles();
	const GridModule m = grid_module_of_pair(c, 1, 2);
	CHECK(m.box() == GridPoint{103, 103});
	CHECK(m.dim_at({0, 100}) == 1);   // cycle A alive
	CHECK(m.dim_at({101, 101}) == 0); // both filled
	CHECK(m.dim_at({0, 0}) == 0);
	CHECK(m.dim_at({100, 100}) == 2);
	CHECK(m.rank_at({0, 100}, {100, 100}) == 1);
	CHECK(m.total_critical_dim() == 10);
}

TEST_CASE("single filled triangle is contractible in degree 1") {
	const FilteredComplex c = parse_complex(
	    "simplex 0  f=0 g=0\nsimplex 1  f=0 g=0\nsimplex 2  f=0 g=0\n"
	    "simplex 0 1  f=0 g=0\nsimplex 0 2  f=0 g=0\nsimplex 1 2  f=0 g=0\n"
	    "simplex 0 1 2  f=0 g=0\n");
	const GridModule m = grid_module_of_pair(c, 1, 2);
	for (value_t x = 0; x <= 2; ++x)
		for (value_t y = 0; y <= 2; ++y) CHECK(m.dim_at({x, y}) == 0);
}

TEST_CASE("axis barcodes match one-parameter diagrams") {
	const FilteredComplex c = twin_triangles();
	const auto [pd_f, pd_g] = axis_barcodes(c, 1, 2);
	const PersistenceDiagram expected{{{0, 1}, {100, 101}}};
	CHECK(multiset_equal(pd_f, expected));
	CHECK(multiset_equal(pd_g, expected));

	const FilteredComplex no_g = parse_complex("simplex 0  f=0\n");
	CHECK_THROWS_AS(axis_barcodes(no_g, 1, 2), MissingG);
	CHECK_THROWS_AS(grid_module_of_pair(no_g, 1, 2), MissingG);
}

TEST_CASE("equal filtrations give equal axis barcodes") {
	std::mt19937 rng(7);
	for (int trial = 0; trial < 10; ++trial) {
		FilteredComplex base = oracles::random_complex(rng, false);
		std::vector<Simplex> simplices = base.simplices();
		std::vector<value_t> values = base.f_values();
		const FilteredComplex c(std::move(simplices), values, values);
		const auto [pd_f, pd_g] = axis_barcodes(c, 1, 2);
		CHECK(multiset_equal(pd_f, pd_g));
	}
}

TEST_CASE("grid ranks match the dense subspace oracle") {
	std::mt19937 rng(90210);
	for (int trial = 0; trial < 12; ++trial) {
		const FilteredComplex c = oracles::random_complex(rng, true);
		const index_t k = trial % 2;
		const GridModule m = grid_module_of_pair(c, k, 2);
		auto mask_of = [&](GridPoint t) {
			std::vector<char> mask(static_cast<std::size_t>(c.size()), 0);
			for (index_t i = 0; i < c.size(); ++i)
				mask[static_cast<std::size_t>(i)] = c.value(i, Function::f) <= t.x &&
				                                    c.value(i, Function::g) <= t.y;
			return mask;
		};
		for (value_t x = 0; x < m.box().x; x += 2)
			for (value_t y = 0; y < m.box().y; y += 2) {
				const GridPoint r{x, y};
				const GridPoint s{std::min(x + 3, m.box().x), std::min(y + 2, m.box().y)};
				CHECK(m.rank_at(r, s) ==
				      oracles::inclusion_rank_dense(c, mask_of(r), mask_of(s), k, 2));
			}
	}
}

TEST_CASE("box edge rows reduce to one-parameter Betti numbers") {
	const FilteredComplex c = twin_triangles();
	const GridModule m = grid_module_of_pair(c, 1, 2);
	for (value_t x : {value_t(0), value_t(1), value_t(100), value_t(101), value_t(103)}) {
		const FilteredComplex sub = sublevel(c, Function::f, x);
		std::vector<char> all(static_cast<std::size_t>(sub.size()), 1);
		CHECK(m.dim_at({x, m.box().y}) == oracles::betti(sub, all, 1, 2));
	}
}

TEST_CASE("hook-decomposable pair modules close the loop") {
	const FilteredComplex c = twin_triangles();
	const GridModule m = grid_module_of_pair(c, 1, 2);
	const HookDecomposition hooks = hook_decompose(m);
	CHECK(multiset_equal(hooks, HookDecomposition{{make_hook({0, 100}, {1, 101}),
	                                               make_hook({100, 0}, {101, 1})}}));
	CHECK(iso_hook_decomposable(m, evaluate_hooks(hooks, m.box())));
}
