#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projlens {

/// Runs the command-line front end. Exit codes: 0 success, 1 usage or
/// validation error, 2 verdict unresolved, 3 check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projlens
