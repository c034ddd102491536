#ifndef PMINT_INTERDICTION_HPP
#define PMINT_INTERDICTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmint/graph.hpp"
#include "pmint/median.hpp"

namespace pmint {

/// Edges deleted by the interdictor, sorted ascending.
class InterdictionStrategy {
public:
  InterdictionStrategy() = default;
  /// Validates ids against the graph and sums their costs.
  InterdictionStrategy(const Graph& graph, std::vector<EdgeId> edge_ids);

  const std::vector<EdgeId>& edge_ids() const { return edge_ids_; }
  Cost total_cost() const { return total_cost_; }

  friend bool operator==(const InterdictionStrategy&, const InterdictionStrategy&) = default;

private:
  std::vector<EdgeId> edge_ids_;
  Cost total_cost_ = 0;
};

enum class Algorithm { Oracle, PathUnit, PathMatrix, TreeLeaf, GreedyHeuristic };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveResult {
  InterdictionStrategy strategy;
  FacilitySet locator_response;
  MedianValue value;
  Algorithm algorithm = Algorithm::Oracle;
  /// Set when a specialized solver handed the instance to the oracle.
  std::string note;
};

/// Locator's best response once the strategy's edges are gone. Throws
/// BudgetError when the strategy costs more than `budget`.
MedianSolution strategy_value(const Graph& graph, const InterdictionStrategy& strategy, int p,
                              Cost budget);

/// Every budget-feasible edge subset, in lexicographic order of sorted ids.
std::vector<std::vector<EdgeId>> feasible_strategies(const Graph& graph, Cost budget);

/// Exhaustive interdiction: every feasible strategy, each with an exact
/// p-median. Ties go to the lexicographically smallest edge set. The default
/// version evaluates strategies in parallel; the serial version is the
/// reference it is tested against.
SolveResult oracle(const Graph& graph, int p, Cost budget);
SolveResult oracle_serial(const Graph& graph, int p, Cost budget);

// --- paths ---------------------------------------------------------------

/// Unit path on n vertices with p = budget + 1: cut the first `budget` edges.
SolveResult solve_path_unit(std::int64_t n, std::int64_t budget);

/// s_i = min(i, k - i) for i = 1..k-1.
std::vector<std::int64_t> crossing_vector(std::int64_t k);

/// Row t (1-based) prices interdicting edge t of an n-vertex path.
using InterdictionMatrix = std::vector<std::vector<std::int64_t>>;
InterdictionMatrix interdiction_matrix(std::int64_t n);

/// Path with arbitrary lengths, unit costs, p = budget + 1. Budget 1 uses the
/// matrix rows; larger budgets price every cut set segment by segment.
SolveResult solve_path_arbitrary(std::span<const Length> lengths, std::int64_t budget);

/// Graph-level wrappers: the path is read off classify(), results carry the
/// graph's own edge and vertex ids. Throw PreconditionError/ShapeError when
/// the instance is outside the solver's domain.
SolveResult solve_path_unit(const Graph& graph, int p, Cost budget);
SolveResult solve_path_arbitrary(const Graph& graph, int p, Cost budget);

/// Reason the solver cannot take the instance, or nullopt.
std::optional<std::string> path_unit_violation(const Graph& graph, int p, Cost budget);
std::optional<std::string> path_matrix_violation(const Graph& graph, int p, Cost budget);
std::optional<std::string> tree_leaf_violation(const Graph& graph, int p, Cost budget);

// --- trees ---------------------------------------------------------------

struct LeafChoice {
  VertexId leaf = 0;
  EdgeId edge = 0;
  Distance distance = 0;  // to the nearest optimal 1-median
};

/// Leaves ordered by distance to the nearest optimal 1-median, ties by id.
std::vector<LeafChoice> leaves_by_median_distance(const Graph& tree);

/// Unit tree, B = 1, p = 2: cut the leaf edge closest to any optimal
/// 1-median. Instances outside that domain are handed to the oracle with a
/// note explaining why.
SolveResult solve_tree_unit_B1(const Graph& tree);

/// Cuts the `budget` leaf edges closest to the 1-median in one step. Not
/// exact for budget > 1; results are tagged GreedyHeuristic.
SolveResult solve_tree_greedy_leaves(const Graph& tree, int p, Cost budget);

}  // namespace pmint

#endif  // PMINT_INTERDICTION_HPP
