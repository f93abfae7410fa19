#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcmlab::cli {

enum ExitCode : int {
  kOk = 0,
  /// A bound or identity failed, or a sweep disagreed with the known
  /// exception set.
  kDiscrepancy = 1,
  kUsage = 2,
};

/// Runs the command line (args excludes the program name). Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcmlab::cli
