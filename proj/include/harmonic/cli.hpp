#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonic::cli {

/// Runs one subcommand. Exit codes: 0 success / positive verdict, 2 failed
/// verification (negative verdict, fold absent, collision absent), 1 usage
/// error. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonic::cli
