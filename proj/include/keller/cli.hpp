#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keller {

/// Runs one CLI invocation (args without the program name) and returns the
/// exit code: 0 verdict computed, 1 verdict computed and property violated,
/// 2 usage/parse/input error, 3 internal invariant breach (always a bug).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace keller
