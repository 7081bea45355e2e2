#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssc::cli {

/// Runs one subcommand. args excludes the program name. Returns 0 on
/// success, 1 on a usage error and 2 on a domain error (unreadable or
/// malformed files, infeasible termination, ...).
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace ssc::cli
