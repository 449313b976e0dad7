#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace hookprod {

/// Exact nonnegative rational with an explicit point at infinity (den == 0).
/// All pipeline values are halves or integers, but the type keeps arbitrary
/// normalized fractions.
struct Rat {
	std::int64_t num = 0;
	std::int64_t den = 1;

	static Rat infinity() { return Rat{1, 0}; }
	static Rat of(std::int64_t num, std::int64_t den = 1) {
		if (den == 0) return infinity();
		std::int64_t g = std::gcd(num, den);
		if (g) {
			num /= g;
			den /= g;
		}
		return Rat{num, den};
	}

	bool is_infinite() const { return den == 0; }

	friend bool operator==(const Rat&, const Rat&) = default;
	friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
		if (a.is_infinite() || b.is_infinite())
			return (a.is_infinite() ? 1 : 0) <=> (b.is_infinite() ? 1 : 0);
		return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
	}

	std::string to_string() const {
		if (is_infinite()) return "inf";
		if (den == 1) return std::to_string(num);
		return std::to_string(num) + "/" + std::to_string(den);
	}
};

}  // namespace hookprod
