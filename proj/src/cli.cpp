#include "hookprod/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hookprod/bipersistence.hpp"
#include "hookprod/complex.hpp"
#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/fp.hpp"
#include "hookprod/grid_module.hpp"
#include "hookprod/persistence.hpp"
#include "hookprod/product.hpp"
#include "hookprod/svg.hpp"

namespace hookprod::cli {

namespace {

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw IoError("cannot open file: " + path);
	std::ostringstream buffer;
	buffer << in.rdbuf();
	return buffer.str();
}

void emit(const std::string& content, const std::string& output_path, std::ostream& out) {
	if (output_path.empty()) {
		out << content;
		return;
	}
	std::ofstream file(output_path, std::ios::binary);
	if (!file) throw IoError("cannot write file: " + output_path);
	file << content;
}

value_t default_prime() {
	if (const char* env = std::getenv("HOOKPROD_PRIME")) {
		value_t p = parse_value(env);
		if (!is_prime(p)) throw SyntaxError("HOOKPROD_PRIME is not prime");
		return p;
	}
	return 2;
}

Function parse_function(const std::string& name) {
	if (name == "f") return Function::f;
	if (name == "g") return Function::g;
	throw SyntaxError("--function must be f or g");
}

struct CommonArgs {
	std::string complex_path;
	std::string output_path;
	index_t degree = 0;
	value_t prime = 0;  // 0 = take the default at run time

	value_t effective_prime() const {
		value_t p = prime ? prime : default_prime();
		if (!is_prime(p)) throw SyntaxError("--prime must be a prime number");
		return p;
	}
};

// Off-diagonal and essential points only; stored diagonal points are
// presentation bookkeeping and not part of the axis barcodes.
PersistenceDiagram off_diagonal_part(const PersistenceDiagram& diagram) {
	PersistenceDiagram result;
	for (const DiagramPoint& p : diagram.points)
		if (!p.is_diagonal()) result.points.push_back(p);
	return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"hook products of one-parameter persistence modules"};
	app.require_subcommand(1);

	CommonArgs common;
	std::string function_name = "f";
	std::string pdf_path, pdg_path, matching_path;
	std::string objective_name_arg = "auto";
	std::string hooks_path, hooks2_path;
	std::vector<value_t> box_values;

	auto* diagram_cmd = app.add_subcommand("diagram", "persistence diagram of one function");
	diagram_cmd->add_option("--complex", common.complex_path, "complex file")->required();
	diagram_cmd->add_option("--function", function_name, "f or g");
	diagram_cmd->add_option("--degree", common.degree, "homology degree")->required();
	diagram_cmd->add_option("--prime", common.prime, "coefficient field prime");
	diagram_cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");

	auto* product_cmd =
	    app.add_subcommand("product", "hooks of the product of two matched diagrams");
	product_cmd->add_option("--pdf", pdf_path, "diagram CSV of f")->required();
	product_cmd->add_option("--pdg", pdg_path, "diagram CSV of g")->required();
	product_cmd->add_option("--matching", matching_path, "matching file")->required();
	product_cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");

	auto* gammabar_cmd =
	    app.add_subcommand("gammabar", "search the distance-minimizing matching");
	gammabar_cmd->add_option("--complex", common.complex_path, "complex file")->required();
	gammabar_cmd->add_option("--degree", common.degree, "homology degree")->required();
	gammabar_cmd->add_option("--prime", common.prime, "coefficient field prime");
	gammabar_cmd->add_option("--objective", objective_name_arg, "exact|matching|auto");
	gammabar_cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");

	auto* check_cmd =
	    app.add_subcommand("check-hook", "hook decomposition and round-trip of the pair module");
	check_cmd->add_option("--complex", common.complex_path, "complex file")->required();
	check_cmd->add_option("--degree", common.degree, "homology degree")->required();
	check_cmd->add_option("--prime", common.prime, "coefficient field prime");
	check_cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");

	auto* svg_cmd = app.add_subcommand("svg", "render hook supports as SVG");
	svg_cmd->add_option("--hooks", hooks_path, "hook CSV")->required();
	svg_cmd->add_option("--hooks2", hooks2_path, "second hook CSV for overlay");
	svg_cmd->add_option("--box", box_values, "truncation box B1 B2")->expected(2);
	svg_cmd->add_option("-o,--output", common.output_path, "output file (default stdout)");

	std::vector<const char*> argv;
	argv.push_back("hookprod");
	for (const std::string& a : args) argv.push_back(a.c_str());

	try {
		try {
			app.parse(static_cast<int>(argv.size()), argv.data());
		} catch (const CLI::CallForHelp& e) {
			return app.exit(e, out, err);
		} catch (const CLI::ParseError& e) {
			err << "error: " << e.what() << "\n";
			return 2;
		}

		if (diagram_cmd->parsed()) {
			const FilteredComplex complex = parse_complex(read_file(common.complex_path));
			const PersistenceDiagram diagram = compute_diagram(
			    complex, parse_function(function_name), common.degree, common.effective_prime());
			emit(write_diagram_csv(diagram), common.output_path, out);
		} else if (product_cmd->parsed()) {
			const PersistenceDiagram pd_f = parse_diagram_csv(read_file(pdf_path));
			const PersistenceDiagram pd_g = parse_diagram_csv(read_file(pdg_path));
			const Matching matching = parse_matching(read_file(matching_path));
			const MatchedProduct product = build_product(pd_f, pd_g, matching);
			if (product.dropped_zero_generators)
				err << "warning: dropped " << product.dropped_zero_generators
				    << " zero generator(s) with both exponents 0\n";
			emit(write_hooks_csv(hooks_of_product(product)), common.output_path, out);
		} else if (gammabar_cmd->parsed()) {
			const FilteredComplex complex = parse_complex(read_file(common.complex_path));
			const value_t prime = common.effective_prime();
			SearchConfig config;
			config.prime = prime;
			if (objective_name_arg == "exact")
				config.objective = Objective::exact_interleaving;
			else if (objective_name_arg == "matching")
				config.objective = Objective::matching_distance_estimate;
			else if (objective_name_arg != "auto")
				throw SyntaxError("--objective must be exact, matching, or auto");
			const auto [pd_f, pd_g] = axis_barcodes(complex, common.degree, prime);
			const GridModule target = grid_module_of_pair(complex, common.degree, prime);
			const SearchReport report = gamma_bar_search(pd_f, pd_g, target, config);
			std::string text = "objective: " + objective_name(report.objective) + "\n" +
			                   "best_value: " + report.best_value.to_string() + "\n" +
			                   "evaluations: " + std::to_string(report.evaluations) + "\n" +
			                   "unscored: " + std::to_string(report.unscored) + "\n" +
			                   "matching:\n" + render_matching(report.best_matching);
			if (report.truncated) text += "# truncated at the candidate cap\n";
			emit(text, common.output_path, out);
		} else if (check_cmd->parsed()) {
			const FilteredComplex complex = parse_complex(read_file(common.complex_path));
			const value_t prime = common.effective_prime();
			const GridModule target = grid_module_of_pair(complex, common.degree, prime);
			std::string text;
			try {
				const HookDecomposition hooks = hook_decompose(target);
				const Reconstruction reconstruction = reconstruct_from_hooks(hooks);
				const bool roundtrip = multiset_equal(
				    hooks_of_product(build_product(reconstruction.pd_f, reconstruction.pd_g,
				                                   reconstruction.matching)),
				    hooks);
				const auto [pd_f, pd_g] = axis_barcodes(complex, common.degree, prime);
				const bool diagrams_match =
				    multiset_equal(off_diagonal_part(reconstruction.pd_f),
				                   off_diagonal_part(pd_f)) &&
				    multiset_equal(off_diagonal_part(reconstruction.pd_g),
				                   off_diagonal_part(pd_g));
				text = "status: hook-decomposable\n";
				text += std::string("roundtrip: ") + (roundtrip ? "ok" : "FAILED") + "\n";
				text += std::string("diagrams: ") +
				        (diagrams_match ? "consistent" : "INCONSISTENT") + "\n";
				text += write_hooks_csv(hooks);
			} catch (const NotHookDecomposable&) {
				text = "status: not-hook-decomposable\n";
			}
			emit(text, common.output_path, out);
		} else if (svg_cmd->parsed()) {
			std::vector<HookDecomposition> layers;
			layers.push_back(parse_hooks_csv(read_file(hooks_path)));
			if (!hooks2_path.empty()) layers.push_back(parse_hooks_csv(read_file(hooks2_path)));
			GridPoint box;
			if (!box_values.empty()) {
				box = {box_values[0], box_values[1]};
			} else {
				value_t mx = 0, my = 0;
				for (const HookDecomposition& layer : layers)
					for (const HookModule& h : layer.hooks) {
						mx = std::max({mx, h.p.x, is_finite(h.q.x) ? h.q.x : 0});
						my = std::max({my, h.p.y, is_finite(h.q.y) ? h.q.y : 0});
					}
				box = {mx + 2, my + 2};
			}
			emit(render_supports_svg(layers, box), common.output_path, out);
		}
		return 0;
	} catch (const BudgetExceededWithReport& e) {
		err << "error: " << e.what() << "\n";
		return 3;
	} catch (const BudgetExceeded& e) {
		err << "error: " << e.what() << "\n";
		return 3;
	} catch (const Error& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

}  // namespace hookprod::cli
