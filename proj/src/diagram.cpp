#include "hookprod/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "hookprod/errors.hpp"

namespace hookprod {

index_t PersistenceDiagram::off_diagonal_count() const {
	return static_cast<index_t>(
	    std::count_if(points.begin(), points.end(),
	                  [](const DiagramPoint& p) { return !p.is_diagonal(); }));
}

std::vector<DiagramPoint> PersistenceDiagram::sorted_points() const {
	std::vector<DiagramPoint> sorted = points;
	std::sort(sorted.begin(), sorted.end());
	return sorted;
}

bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b) {
	return a.sorted_points() == b.sorted_points();
}

BarcodePresentation presentation_from_diagram(const std::vector<DiagramPoint>& points) {
	BarcodePresentation result;
	result.generators.reserve(points.size());
	for (const DiagramPoint& p : points) {
		if (p.birth > p.death) throw Error("diagram point with birth > death");
		result.generators.push_back({p.birth, p.persistence()});
	}
	return result;
}

std::string write_diagram_csv(const PersistenceDiagram& diagram) {
	std::string out = "birth,death\n";
	for (const DiagramPoint& p : diagram.sorted_points())
		out += std::to_string(p.birth) + ',' + format_value(p.death) + '\n';
	return out;
}

PersistenceDiagram parse_diagram_csv(const std::string& text) {
	PersistenceDiagram diagram;
	std::istringstream in(text);
	std::string line;
	int line_no = 0;
	bool header_seen = false;
	while (std::getline(in, line)) {
		++line_no;
		while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
		if (line.empty() || line[0] == '#') continue;
		if (!header_seen) {
			if (line != "birth,death")
				throw SyntaxError("line " + std::to_string(line_no) +
				                  ": expected header 'birth,death'");
			header_seen = true;
			continue;
		}
		auto comma = line.find(',');
		if (comma == std::string::npos)
			throw SyntaxError("line " + std::to_string(line_no) + ": expected 'birth,death'");
		DiagramPoint p;
		p.birth = parse_value(line.substr(0, comma));
		p.death = parse_value(line.substr(comma + 1));
		if (!is_finite(p.birth) || p.birth > p.death)
			throw SyntaxError("line " + std::to_string(line_no) + ": invalid diagram point");
		diagram.points.push_back(p);
	}
	return diagram;
}

}  // namespace hookprod
