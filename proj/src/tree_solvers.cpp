#include <algorithm>

#include "pmint/error.hpp"
#include "pmint/interdiction.hpp"

namespace pmint {

std::vector<LeafChoice> leaves_by_median_distance(const Graph& tree) {
  const OneMedianTable medians = all_vertex_1median_values(tree);
  // One multi-source traversal from the whole optimal set.
  const auto dist = distances_from_set(tree, medians.optimal);
  std::vector<LeafChoice> leaves;
  for (VertexId v = 1; v <= tree.vertex_count(); ++v)
    if (tree.degree(v) == 1) leaves.push_back({v, tree.incident(v).front().edge, dist[v]});
  std::sort(leaves.begin(), leaves.end(), [](const LeafChoice& a, const LeafChoice& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.leaf < b.leaf;
  });
  return leaves;
}

std::optional<std::string> tree_leaf_violation(const Graph& graph, int p, Cost budget) {
  if (!is_tree(classify(graph))) return "graph is not a tree";
  if (graph.vertex_count() < 2) return "tree needs at least two vertices";
  if (!graph.has_unit_lengths()) return "edge lengths are not all 1";
  if (!graph.has_unit_costs()) return "interdiction costs are not all 1";
  if (budget != 1) return "budget must be 1";
  if (p != 2) return "p must be 2";
  return std::nullopt;
}

SolveResult solve_tree_unit_B1(const Graph& tree) {
  if (auto why = tree_leaf_violation(tree, 2, 1)) {
    SolveResult fallback = oracle(tree, 2, 1);
    fallback.note = "tree-leaf preconditions violated (" + *why + "); solved by oracle";
    return fallback;
  }
  const LeafChoice choice = leaves_by_median_distance(tree).front();
  SolveResult result;
  result.strategy = InterdictionStrategy(tree, {choice.edge});
  auto response = strategy_value(tree, result.strategy, 2, 1);
  result.locator_response = std::move(response.facilities);
  result.value = response.value;
  result.algorithm = Algorithm::TreeLeaf;
  return result;
}

SolveResult solve_tree_greedy_leaves(const Graph& tree, int p, Cost budget) {
  if (!is_tree(classify(tree))) throw ShapeError("greedy-heuristic: graph is not a tree");
  if (budget < 0) throw InputError("budget must be nonnegative");
  const auto leaves = leaves_by_median_distance(tree);
  if (static_cast<std::size_t>(budget) > leaves.size())
    throw PreconditionError("greedy-heuristic: tree has " + std::to_string(leaves.size()) +
                            " leaves, budget asks for " + std::to_string(budget));
  std::vector<EdgeId> cut;
  for (std::size_t i = 0; i < static_cast<std::size_t>(budget); ++i) cut.push_back(leaves[i].edge);
  // Two leaves of a single edge share it.
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

  SolveResult result;
  result.strategy = InterdictionStrategy(tree, cut);
  if (result.strategy.total_cost() > budget)
    throw PreconditionError("greedy-heuristic: chosen leaf edges cost " +
                            std::to_string(result.strategy.total_cost()) + ", budget is " +
                            std::to_string(budget));
  auto response = strategy_value(tree, result.strategy, p, budget);
  result.locator_response = std::move(response.facilities);
  result.value = response.value;
  result.algorithm = Algorithm::GreedyHeuristic;
  return result;
}

}  // namespace pmint
