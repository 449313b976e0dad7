#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace hookprod {

using index_t = std::int64_t;
using value_t = std::int64_t;

// Sentinel for unbounded deaths / relation exponents.
inline constexpr value_t infinite_value = std::numeric_limits<value_t>::max();

inline bool is_finite(value_t v) { return v != infinite_value; }

struct GridPoint {
	value_t x = 0;
	value_t y = 0;

	friend bool operator==(const GridPoint&, const GridPoint&) = default;
	// Lexicographic order, for use in sorted containers only.
	friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Coordinate-wise (product poset) order.
inline bool poset_leq(const GridPoint& a, const GridPoint& b) {
	return a.x <= b.x && a.y <= b.y;
}

std::string format_value(value_t v);           // "17" or "inf"
value_t parse_value(const std::string& token); // inverse of format_value

}  // namespace hookprod
