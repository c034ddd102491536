#ifndef PMINT_CLI_HPP
#define PMINT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmint/interdiction.hpp"

namespace pmint::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kPreconditionFailed = 3,
};

struct CliConfig {
  std::string verb;
  std::optional<std::string> input;  // stdin when empty
  std::string algorithm = "auto";
  bool machine = false;
  std::uint64_t seed = 0;
  std::optional<int> p;
  std::optional<Cost> budget;
  std::string strategy;  // "e3,e5" or "3,5"

  // generate
  std::string kind;
  VertexId size = 0;
  Length min_length = 1;
  Length max_length = 10;
  bool zero_lengths = false;
  std::string weights;  // "1,1,1,1"
  std::string items;    // "w:p,w:p"
  std::int64_t capacity = 0;
  std::int64_t target = 0;
};

/// Algorithm `auto` picks for an instance: the most specialized exact solver
/// whose preconditions hold, else the oracle.
Algorithm route_auto(const Graph& graph, int p, Cost budget);

/// Runs a solver by tag. Throws PreconditionError when a specialized solver
/// cannot take the instance.
SolveResult solve_with(Algorithm algorithm, const Graph& graph, int p, Cost budget);

/// Parses "e3,5,e7" into edge ids.
std::vector<EdgeId> parse_edge_list(const std::string& text);

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// argv-style entry point (args excludes the program name).
int run_args(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace pmint::cli

#endif  // PMINT_CLI_HPP
