#pragma once

#include <vector>

#include "hookprod/types.hpp"

namespace hookprod {

/// Sparse column over F_p: entries sorted by strictly increasing row index,
/// coefficients in [1, p).
struct FpEntry {
	index_t row;
	value_t coef;

	friend bool operator==(const FpEntry&, const FpEntry&) = default;
};

using FpColumn = std::vector<FpEntry>;

struct FpMatrix {
	std::vector<FpColumn> columns;
	index_t nrows = 0;
	value_t modulus = 2;

	index_t ncols() const { return static_cast<index_t>(columns.size()); }
};

value_t mod_inverse(value_t a, value_t p);

bool is_prime(value_t p);

/// Adds c * source to target (both columns over F_p).
FpColumn column_axpy(const FpColumn& target, const FpColumn& source, value_t c, value_t p);

struct Reduction {
	FpMatrix matrix;
	// pivot_row[j] = lowest row index of reduced column j, or -1 if the column
	// vanished. Distinct nonzero columns have distinct pivots.
	std::vector<index_t> pivot_row;

	index_t rank() const;
};

/// Left-to-right column reduction. Column space is preserved; the result is
/// deterministic given the column order.
Reduction reduce(const FpMatrix& matrix);

index_t rank(const FpMatrix& matrix);

}  // namespace hookprod
