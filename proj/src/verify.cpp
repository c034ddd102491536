#include <sstream>

#include "pmint/cli.hpp"
#include "pmint/error.hpp"
#include "pmint/fixtures.hpp"
#include "pmint/instance_io.hpp"

namespace pmint {

namespace {

const InterdictionMatrix kSevenVertexMatrix{
    {0, 1, 2, 3, 2, 1}, {1, 0, 1, 2, 2, 1}, {1, 1, 0, 1, 2, 1},
    {1, 2, 1, 0, 1, 1}, {1, 2, 2, 1, 0, 1}, {1, 2, 3, 2, 1, 0},
};

std::string observe(const Instance& inst, const std::string& line, std::string& expected) {
  std::istringstream in(line);
  std::string check;
  in >> check;
  const Graph& g = inst.graph;
  if (check == "strategy") {
    std::string edges;
    in >> edges >> expected;
    const InterdictionStrategy strategy(g, cli::parse_edge_list(edges));
    return strategy_value(g, strategy, inst.p, inst.budget).value.to_string();
  }
  if (check == "one-median") {
    std::string vertex;
    in >> vertex >> expected;
    expected = vertex + " " + expected;
    const VertexId median = goldman_1_median(g);
    const auto table = all_vertex_1median_values(g);
    if (table.values[median] != table.optimum) return "non-optimal " + std::to_string(median);
    return std::to_string(median) + " " + std::to_string(table.optimum);
  }
  in >> expected;
  if (check == "heuristic")
    return solve_tree_greedy_leaves(g, inst.p, inst.budget).value.to_string();
  if (check == "auto")
    return cli::solve_with(cli::route_auto(g, inst.p, inst.budget), g, inst.p, inst.budget)
        .value.to_string();
  if (const auto algorithm = parse_algorithm(check))
    return cli::solve_with(*algorithm, g, inst.p, inst.budget).value.to_string();
  throw InputError("unknown sidecar check '" + check + "'");
}

}  // namespace

std::vector<ClaimOutcome> verify_fixtures() {
  std::vector<ClaimOutcome> outcomes;
  for (const Fixture& fixture : fixture_corpus()) {
    const Instance inst = parse_instance(fixture.instance);
    std::istringstream sidecar{std::string(fixture.expected)};
    std::string line;
    while (std::getline(sidecar, line)) {
      if (line.empty() || line.front() == '#') continue;
      ClaimOutcome outcome{std::string(fixture.name), line, false, {}};
      std::string expected;
      try {
        outcome.observed = observe(inst, line, expected);
        outcome.pass = outcome.observed == expected;
      } catch (const std::exception& e) {
        outcome.observed = std::string("error: ") + e.what();
      }
      outcomes.push_back(std::move(outcome));
    }
  }
  ClaimOutcome matrix{"crossing-counts", "interdiction-matrix 7", false, {}};
  matrix.pass = interdiction_matrix(7) == kSevenVertexMatrix;
  matrix.observed = matrix.pass ? "matches" : "differs";
  outcomes.push_back(std::move(matrix));
  return outcomes;
}

}  // namespace pmint
