#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsseq::cli {

// Runs the command-line tool on the given arguments (program name excluded).
// Returns the process exit code: 0 success, 1 usage error, 2 validation or
// acceptance failure. All file output goes through the filesystem; report
// text goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsseq::cli
