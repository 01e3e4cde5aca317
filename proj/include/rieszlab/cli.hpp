#pragma once

// Command-line front end: `rieszlab <analyze|dual|example|family|gabor> ...`.

#include <iosfwd>
#include <string>
#include <vector>

namespace rieszlab::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,       ///< usage error or malformed input file
    kNumeric = 3,     ///< numerical failure (route disagreement, ill-conditioning)
    kNoDual = 4,      ///< dependent columns, no biorthogonal sequence
    kTruncation = 5,  ///< Gabor node outside the safe discretization window
};

/// Runs one invocation. args excludes the program name. Reports go to `out`
/// unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rieszlab::cli
