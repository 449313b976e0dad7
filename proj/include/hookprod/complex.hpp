#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookprod/types.hpp"

namespace hookprod {

/// A simplex as its strictly increasing vertex list.
struct Simplex {
	std::vector<index_t> vertices;

	index_t dimension() const { return static_cast<index_t>(vertices.size()) - 1; }
	std::vector<Simplex> faces() const;  // codimension-1 faces
	std::string to_string() const;

	friend bool operator==(const Simplex&, const Simplex&) = default;
	friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Canonicalizes (sorts) a vertex list; rejects duplicates and negatives.
Simplex make_simplex(std::vector<index_t> vertices);

enum class Function { f, g };

/// A finite simplicial complex with one or two simplex-wise filtration
/// functions taking natural-number values. Closure and monotonicity are
/// enforced at construction; instances are immutable afterwards.
class FilteredComplex {
public:
	FilteredComplex() = default;
	FilteredComplex(std::vector<Simplex> simplices, std::vector<value_t> f_values,
	                std::vector<value_t> g_values = {});

	index_t size() const { return static_cast<index_t>(simplices_.size()); }
	bool empty() const { return simplices_.empty(); }
	bool has_g() const { return !g_values_.empty(); }

	const Simplex& simplex(index_t i) const { return simplices_[static_cast<std::size_t>(i)]; }
	value_t value(index_t i, Function which) const;
	const std::vector<Simplex>& simplices() const { return simplices_; }
	const std::vector<value_t>& f_values() const { return f_values_; }
	const std::vector<value_t>& g_values() const { return g_values_; }

	std::optional<index_t> index_of(const Simplex& s) const;
	value_t max_value(Function which) const;  // 0 on an empty complex

private:
	std::vector<Simplex> simplices_;
	std::vector<value_t> f_values_;
	std::vector<value_t> g_values_;
};

/// Subcomplex of simplices with value(which) <= threshold.
FilteredComplex sublevel(const FilteredComplex& complex, Function which, value_t threshold);

/// Subcomplex of simplices with (f, g) <= threshold coordinate-wise.
FilteredComplex sublevel_pair(const FilteredComplex& complex, GridPoint threshold);

/// Parses the line-oriented complex format:
///   # comment
///   simplex v0 v1 ... vk  f=<nat> [g=<nat>]
/// Vertices may appear in any order; either all or no lines carry g=.
FilteredComplex parse_complex(const std::string& text);

std::string render_complex(const FilteredComplex& complex);

}  // namespace hookprod
