#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hookprod::cli {

/// Runs one hookprod command. Returns the process exit code: 0 on success,
/// 2 on input or usage errors, 3 on budget/resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hookprod::cli
