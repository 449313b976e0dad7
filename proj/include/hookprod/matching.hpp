#pragma once

#include <array>
#include <string>
#include <vector>

#include "hookprod/diagram.hpp"
#include "hookprod/types.hpp"

namespace hookprod {

/// A finitely-supported bijection between two augmented diagrams. Stored
/// points of either side are addressed by position; fresh diagonal copies are
/// addressed by their parameter t. Every stored point of both diagrams must be
/// used exactly once; all unlisted diagonal copies are implicitly matched
/// diagonal-to-diagonal.
struct Matching {
	struct PointPair {  // stored point <-> stored point
		index_t f_index;
		index_t g_index;
	};
	struct FToDiagonal {  // stored f point -> fresh diagonal copy (t, t) of g
		index_t f_index;
		value_t t;
	};
	struct DiagonalToG {  // fresh diagonal copy (t, t) of f -> stored g point
		value_t t;
		index_t g_index;
	};

	std::vector<PointPair> pairs;
	std::vector<FToDiagonal> f_to_diagonal;
	std::vector<DiagonalToG> diagonal_to_g;

	index_t entry_count() const {
		return static_cast<index_t>(pairs.size() + f_to_diagonal.size() + diagonal_to_g.size());
	}

	/// Throws InvalidMatching on out-of-range or doubly used indices and
	/// UncoveredPoint when a stored point of either diagram is unused.
	void validate(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g) const;

	Matching inverse() const;

	/// Canonical sorted encoding; total order used for deterministic
	/// tie-breaking. Entries encode as (0, i, j), (1, i, t), (2, t, j).
	std::vector<std::array<value_t, 3>> encode() const;

	friend bool operator==(const Matching& a, const Matching& b) {
		return a.encode() == b.encode();
	}
};

bool encoding_less(const Matching& a, const Matching& b);

/// Line-oriented matching format: `match <i> <j>`, `fdiag <i> <t>`,
/// `gdiag <t> <j>`; `#` starts a comment.
Matching parse_matching(const std::string& text);
std::string render_matching(const Matching& matching);

}  // namespace hookprod
