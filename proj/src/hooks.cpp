#include "hookprod/hooks.hpp"

#include <algorithm>
#include <sstream>

#include "hookprod/errors.hpp"

namespace hookprod {

void HookModule::validate() const {
	if (p.x < 0 || p.y < 0 || !is_finite(p.x) || !is_finite(p.y))
		throw SyntaxError("hook corner p must have finite natural coordinates");
	if ((is_finite(q.x) && q.x < p.x) || (is_finite(q.y) && q.y < p.y))
		throw SyntaxError("hook corner q must dominate p");
	if (has_empty_support()) throw SyntaxError("hook with q = p has empty support");
}

HookModule make_hook(GridPoint p, GridPoint q) {
	HookModule hook{p, q};
	hook.validate();
	return hook;
}

HookModule make_free_quadrant(GridPoint p) {
	return make_hook(p, {infinite_value, infinite_value});
}

std::vector<HookModule> HookDecomposition::sorted_hooks() const {
	std::vector<HookModule> sorted = hooks;
	std::sort(sorted.begin(), sorted.end());
	return sorted;
}

index_t HookDecomposition::dimension_at(GridPoint r) const {
	return static_cast<index_t>(std::count_if(
	    hooks.begin(), hooks.end(), [&](const HookModule& h) { return h.contains(r); }));
}

bool multiset_equal(const HookDecomposition& a, const HookDecomposition& b) {
	return a.sorted_hooks() == b.sorted_hooks();
}

std::string write_hooks_csv(const HookDecomposition& decomposition) {
	std::string out = "p1,p2,q1,q2\n";
	for (const HookModule& h : decomposition.sorted_hooks())
		out += std::to_string(h.p.x) + ',' + std::to_string(h.p.y) + ',' + format_value(h.q.x) +
		       ',' + format_value(h.q.y) + '\n';
	return out;
}

HookDecomposition parse_hooks_csv(const std::string& text) {
	HookDecomposition decomposition;
	std::istringstream in(text);
	std::string line;
	int line_no = 0;
	bool header_seen = false;
	while (std::getline(in, line)) {
		++line_no;
		while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
		if (line.empty() || line[0] == '#') continue;
		auto fail = [&](const std::string& msg) -> SyntaxError {
			return SyntaxError("line " + std::to_string(line_no) + ": " + msg);
		};
		if (!header_seen) {
			if (line != "p1,p2,q1,q2") throw fail("expected header 'p1,p2,q1,q2'");
			header_seen = true;
			continue;
		}
		std::vector<std::string> fields;
		std::istringstream ls(line);
		std::string field;
		while (std::getline(ls, field, ',')) fields.push_back(field);
		if (fields.size() != 4) throw fail("expected four fields");
		try {
			HookModule hook{{parse_value(fields[0]), parse_value(fields[1])},
			                {parse_value(fields[2]), parse_value(fields[3])}};
			hook.validate();
			decomposition.hooks.push_back(hook);
		} catch (const SyntaxError& e) {
			throw fail(e.what());
		}
	}
	return decomposition;
}

}  // namespace hookprod
