#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokenalg::cli {

/// Runs the tokenalg command line with the given arguments (excluding the
/// program name). Reports go to `out`, diagnostics to `err`. Returns the
/// process exit code: 0 all checks passed, 1 some check failed, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokenalg::cli
