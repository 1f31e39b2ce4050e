#ifndef ABSPEC_RUNNER_HPP
#define ABSPEC_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "abspec/config.hpp"

namespace abspec {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitComputation = 3,
  kExitIo = 4,
};

/// Result of one computation, before anything touches the filesystem.
struct RunArtifacts {
  std::string csv;
  /// "name = value unit" lines.
  std::vector<std::string> summary;
  std::vector<std::string> warnings;
};

/// Runs the configured command. Throws InvalidArgument or ConvergenceError.
RunArtifacts execute(const RunConfig& config);

/// Output path after defaults: config.output, or "<command>.csv".
std::string output_path(const RunConfig& config);

/// execute() plus an atomic write of the CSV and the summary on `out`.
/// Failures produce one line on `err`:
///   error kind=<config|computation|io> field=<path> message="<text>"
/// and the matching ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line handling:
///   abspec <command> <config.json> [--set key=value]... [--out path]
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace abspec

#endif  // ABSPEC_RUNNER_HPP
