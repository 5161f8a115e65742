#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ultrapic {

/// Exit statuses of the batch front-end.
enum ExitCode : int {
  kExitOk = 0,
  kExitAnalysis = 1,  // the analysis itself failed (WindowInsufficient, ...)
  kExitUsage = 2,     // bad flags, unreadable or malformed input file
};

/// Runs one subcommand. args excludes the program name. Results go to out
/// (or to --out PATH), diagnostics to err.
///
///   polygon  <file> [--range S1 S2] [--svg]
///   zeros    <file> --from S1 --to S2
///   classify <file> --radius-val S
///   extend   <file> --radius-val S
///   image    <file> --radius-val S
///   contains <file> --radius-val S --value W
///   factor   <file> --precision N
///
/// Common flags: --out PATH, --format tsv|json.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace ultrapic
