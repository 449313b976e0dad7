#pragma once

#include <string>
#include <vector>

#include "hookprod/types.hpp"

namespace hookprod {

/// One birth/death pair; death may be infinite_value. birth == death marks an
/// explicitly stored diagonal point.
struct DiagramPoint {
	value_t birth = 0;
	value_t death = 0;

	bool is_diagonal() const { return birth == death; }
	value_t persistence() const {
		return is_finite(death) ? death - birth : infinite_value;
	}

	friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
	friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Finite multiset of diagram points. Point order is preserved (matching files
/// address points by position); equality is as multisets. The infinitely many
/// implicit diagonal copies are never stored.
struct PersistenceDiagram {
	std::vector<DiagramPoint> points;

	index_t size() const { return static_cast<index_t>(points.size()); }
	index_t off_diagonal_count() const;
	std::vector<DiagramPoint> sorted_points() const;

	friend bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b);
};

/// Presentation of a one-parameter module: one generator per point, of degree
/// birth, annihilated after `exponent` steps (infinite_value = free).
struct BarcodePresentation {
	struct Generator {
		value_t degree;
		value_t exponent;

		friend bool operator==(const Generator&, const Generator&) = default;
	};
	std::vector<Generator> generators;
};

BarcodePresentation presentation_from_diagram(const std::vector<DiagramPoint>& points);

/// CSV with header `birth,death`; death is a natural or `inf`; repeated rows
/// encode multiplicity. Rows are written in sorted order; parsing preserves
/// row order.
std::string write_diagram_csv(const PersistenceDiagram& diagram);
PersistenceDiagram parse_diagram_csv(const std::string& text);

}  // namespace hookprod
