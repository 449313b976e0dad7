#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hookprod/bipersistence.hpp"
#include "hookprod/cli.hpp"
#include "hookprod/complex.hpp"
#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/grid_module.hpp"
#include "hookprod/persistence.hpp"
#include "hookprod/product.hpp"
#include "hookprod/svg.hpp"

namespace py = pybind11;
using namespace hookprod;

namespace {

using PointTuple = std::pair<value_t, value_t>;
using HookTuple = std::tuple<value_t, value_t, value_t, value_t>;

PersistenceDiagram to_diagram(const std::vector<PointTuple>& points) {
	PersistenceDiagram diagram;
	for (auto [b, d] : points) diagram.points.push_back({b, d});
	return diagram;
}

std::vector<PointTuple> from_diagram(const PersistenceDiagram& diagram) {
	std::vector<PointTuple> points;
	for (const DiagramPoint& p : diagram.points) points.emplace_back(p.birth, p.death);
	return points;
}

HookDecomposition to_hooks(const std::vector<HookTuple>& hooks) {
	HookDecomposition decomposition;
	for (auto [p1, p2, q1, q2] : hooks)
		decomposition.hooks.push_back(make_hook({p1, p2}, {q1, q2}));
	return decomposition;
}

std::vector<HookTuple> from_hooks(const HookDecomposition& decomposition) {
	std::vector<HookTuple> hooks;
	for (const HookModule& h : decomposition.sorted_hooks())
		hooks.emplace_back(h.p.x, h.p.y, h.q.x, h.q.y);
	return hooks;
}

GridPoint to_point(const PointTuple& p) { return {p.first, p.second}; }

std::pair<std::int64_t, std::int64_t> from_rat(const Rat& r) { return {r.num, r.den}; }

Matching to_matching(const std::vector<PointTuple>& pairs,
                     const std::vector<PointTuple>& f_to_diagonal,
                     const std::vector<PointTuple>& diagonal_to_g) {
	Matching m;
	for (auto [i, j] : pairs) m.pairs.push_back({i, j});
	for (auto [i, t] : f_to_diagonal) m.f_to_diagonal.push_back({i, t});
	for (auto [t, j] : diagonal_to_g) m.diagonal_to_g.push_back({t, j});
	return m;
}

}  // namespace

PYBIND11_MODULE(_hookprod, m) {
	m.doc() = "hook products of one-parameter persistence modules";
	m.attr("INF") = infinite_value;

	py::register_exception<Error>(m, "Error");

	py::class_<FilteredComplex>(m, "FilteredComplex")
	    .def("__len__", &FilteredComplex::size)
	    .def_property_readonly("has_g", &FilteredComplex::has_g)
	    .def("render", &render_complex)
	    .def("__repr__", [](const FilteredComplex& c) {
		    return "<FilteredComplex with " + std::to_string(c.size()) + " simplices>";
	    });

	py::class_<Matching>(m, "Matching")
	    .def(py::init(&to_matching), py::arg("pairs") = std::vector<PointTuple>{},
	         py::arg("f_to_diagonal") = std::vector<PointTuple>{},
	         py::arg("diagonal_to_g") = std::vector<PointTuple>{})
	    .def("render", &render_matching)
	    .def("inverse", &Matching::inverse)
	    .def("__eq__", [](const Matching& a, const Matching& b) { return a == b; })
	    .def("__repr__", [](const Matching& m_) { return render_matching(m_); });

	py::class_<GridModule>(m, "GridModule")
	    .def_property_readonly("box",
	                           [](const GridModule& g) {
		                           return PointTuple{g.box().x, g.box().y};
	                           })
	    .def("dim_at", [](const GridModule& g, PointTuple r) { return g.dim_at(to_point(r)); })
	    .def("rank_at",
	         [](const GridModule& g, PointTuple r, PointTuple s) {
		         return g.rank_at(to_point(r), to_point(s));
	         })
	    .def("total_critical_dim", &GridModule::total_critical_dim)
	    .def("to_csv", &GridModule::to_csv);

	m.def("parse_complex", &parse_complex, py::arg("text"));
	m.def(
	    "make_complex",
	    [](const std::vector<std::vector<index_t>>& simplices, const std::vector<value_t>& f,
	       const std::vector<value_t>& g) {
		    std::vector<Simplex> list;
		    for (const auto& vertices : simplices) list.push_back(make_simplex(vertices));
		    return FilteredComplex(std::move(list), f, g);
	    },
	    py::arg("simplices"), py::arg("f"), py::arg("g") = std::vector<value_t>{});

	m.def(
	    "compute_diagram",
	    [](const FilteredComplex& complex, const std::string& function, index_t degree,
	       value_t prime) {
		    Function which = function == "g" ? Function::g : Function::f;
		    return from_diagram(compute_diagram(complex, which, degree, prime));
	    },
	    py::arg("complex"), py::arg("function"), py::arg("degree"), py::arg("prime") = 2);

	m.def(
	    "axis_barcodes",
	    [](const FilteredComplex& complex, index_t degree, value_t prime) {
		    auto [pd_f, pd_g] = axis_barcodes(complex, degree, prime);
		    return std::pair(from_diagram(pd_f), from_diagram(pd_g));
	    },
	    py::arg("complex"), py::arg("degree"), py::arg("prime") = 2);

	m.def(
	    "grid_module_of_pair",
	    [](const FilteredComplex& complex, index_t degree, value_t prime,
	       std::optional<PointTuple> box) {
		    return box ? grid_module_of_pair(complex, degree, prime, to_point(*box))
		               : grid_module_of_pair(complex, degree, prime);
	    },
	    py::arg("complex"), py::arg("degree"), py::arg("prime") = 2,
	    py::arg("box") = std::nullopt);

	m.def(
	    "build_product",
	    [](const std::vector<PointTuple>& pd_f, const std::vector<PointTuple>& pd_g,
	       const Matching& matching) {
		    const MatchedProduct product =
		        build_product(to_diagram(pd_f), to_diagram(pd_g), matching);
		    std::vector<std::tuple<value_t, value_t, value_t, value_t>> generators;
		    for (const auto& gen : product.generators)
			    generators.emplace_back(gen.b, gen.b2, gen.a, gen.c);
		    return generators;
	    },
	    py::arg("pd_f"), py::arg("pd_g"), py::arg("matching"));

	m.def(
	    "product_hooks",
	    [](const std::vector<PointTuple>& pd_f, const std::vector<PointTuple>& pd_g,
	       const Matching& matching) {
		    return from_hooks(
		        hooks_of_product(build_product(to_diagram(pd_f), to_diagram(pd_g), matching)));
	    },
	    py::arg("pd_f"), py::arg("pd_g"), py::arg("matching"));

	m.def("reconstruct_from_hooks", [](const std::vector<HookTuple>& hooks) {
		const Reconstruction r = reconstruct_from_hooks(to_hooks(hooks));
		return std::tuple(from_diagram(r.pd_f), from_diagram(r.pd_g), r.matching);
	});

	m.def(
	    "evaluate_hooks",
	    [](const std::vector<HookTuple>& hooks, PointTuple box) {
		    return evaluate_hooks(to_hooks(hooks), to_point(box));
	    },
	    py::arg("hooks"), py::arg("box"));

	m.def("hook_decompose",
	      [](const GridModule& module) { return from_hooks(hook_decompose(module)); });
	m.def("iso_hook_decomposable", &iso_hook_decomposable);

	m.def(
	    "bottleneck",
	    [](const std::vector<PointTuple>& pd_a, const std::vector<PointTuple>& pd_b) {
		    const BottleneckResult r = bottleneck(to_diagram(pd_a), to_diagram(pd_b));
		    return std::pair(from_rat(r.value), r.matching);
	    },
	    py::arg("pd_a"), py::arg("pd_b"));

	m.def(
	    "interleaving_exact",
	    [](const std::vector<HookTuple>& a, const std::vector<HookTuple>& b, value_t max_eps) {
		    return interleaving_exact(to_hooks(a), to_hooks(b), max_eps);
	    },
	    py::arg("hooks_a"), py::arg("hooks_b"), py::arg("max_eps"));

	m.def(
	    "matching_distance_estimate",
	    [](const GridModule& a, const GridModule& b) {
		    return from_rat(matching_distance_estimate(a, b, default_line_samples(a, b)));
	    },
	    py::arg("a"), py::arg("b"));

	m.def(
	    "gamma_bar_search",
	    [](const std::vector<PointTuple>& pd_f, const std::vector<PointTuple>& pd_g,
	       const GridModule& target, const std::string& objective) {
		    SearchConfig config;
		    if (objective == "exact")
			    config.objective = Objective::exact_interleaving;
		    else if (objective == "matching")
			    config.objective = Objective::matching_distance_estimate;
		    const SearchReport report =
		        gamma_bar_search(to_diagram(pd_f), to_diagram(pd_g), target, config);
		    py::dict result;
		    result["best_matching"] = report.best_matching;
		    result["best_value"] = from_rat(report.best_value);
		    result["objective"] = objective_name(report.objective);
		    result["evaluations"] = report.evaluations;
		    result["unscored"] = report.unscored;
		    result["truncated"] = report.truncated;
		    return result;
	    },
	    py::arg("pd_f"), py::arg("pd_g"), py::arg("target"), py::arg("objective") = "auto");

	m.def(
	    "render_supports_svg",
	    [](const std::vector<std::vector<HookTuple>>& layers, PointTuple box) {
		    std::vector<HookDecomposition> decompositions;
		    for (const auto& layer : layers) decompositions.push_back(to_hooks(layer));
		    return render_supports_svg(decompositions, to_point(box));
	    },
	    py::arg("layers"), py::arg("box"));

	m.def("run_cli", [](const std::vector<std::string>& args) {
		std::ostringstream out, err;
		int code = cli::run(args, out, err);
		return std::tuple(code, out.str(), err.str());
	});
}
