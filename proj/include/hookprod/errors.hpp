#pragma once

#include <stdexcept>
#include <string>

namespace hookprod {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Input-side failures (CLI exit code 2).
struct SyntaxError : Error {
	using Error::Error;
};
struct ClosureError : Error {
	using Error::Error;
};
struct MonotonicityError : Error {
	using Error::Error;
};
struct MissingG : Error {
	MissingG() : Error("complex carries no g filtration values") {}
};
struct UncoveredPoint : Error {
	using Error::Error;
};
struct InvalidMatching : Error {
	using Error::Error;
};
struct UnsupportedHook : Error {
	using Error::Error;
};
struct IoError : Error {
	using Error::Error;
};

// Structural verdicts from decomposition.
struct NotHookDecomposable : Error {
	using Error::Error;
};
struct UnstableTail : Error {
	using Error::Error;
};

// Resource limits (CLI exit code 3).
struct BudgetExceeded : Error {
	using Error::Error;
};

}  // namespace hookprod
