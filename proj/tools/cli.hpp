#ifndef EMERGY_TOOLS_CLI_HPP
#define EMERGY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "emergy/compatibility.hpp"

namespace emergy::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // violations, P4 found, count mismatch
  kUsage = 2,          // bad flags, unreadable or malformed input, bad arc
  kMethodMismatch = 3  // e.g. --method dag on a cyclic graph
};

/// Runs `empower` with `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints vertex/edge counts and the P4 verdict for an explicit graph.
/// Returns kOk when P4-free, kFailure with the witness otherwise.
int report_cograph(const CompatibilityGraph& cg, std::ostream& out, std::size_t vertex_cap = kDefaultP4VertexCap);

}  // namespace emergy::cli

#endif  // EMERGY_TOOLS_CLI_HPP
