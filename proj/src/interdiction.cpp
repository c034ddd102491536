#include "pmint/interdiction.hpp"

#include <algorithm>
#include <array>

#include "pmint/error.hpp"

namespace pmint {

InterdictionStrategy::InterdictionStrategy(const Graph& graph, std::vector<EdgeId> edge_ids)
    : edge_ids_(std::move(edge_ids)) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
  for (std::size_t i = 0; i < edge_ids_.size(); ++i) {
    const EdgeId e = edge_ids_[i];
    if (e < 1 || e > graph.edge_count()) throw InputError("unknown edge id " + std::to_string(e));
    if (i > 0 && edge_ids_[i - 1] == e)
      throw InputError("edge id " + std::to_string(e) + " listed twice");
    total_cost_ += graph.edge(e).cost;
  }
}

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithmNames{{
    {Algorithm::Oracle, "oracle"},
    {Algorithm::PathUnit, "path-unit"},
    {Algorithm::PathMatrix, "path-matrix"},
    {Algorithm::TreeLeaf, "tree-leaf"},
    {Algorithm::GreedyHeuristic, "greedy-heuristic"},
}};

void check_instance(const Graph& graph, int p, Cost budget) {
  if (p < 1 || p > graph.vertex_count())
    throw InputError("p = " + std::to_string(p) + " outside 1.." +
                     std::to_string(graph.vertex_count()));
  if (budget < 0) throw InputError("budget must be nonnegative");
}

/// Depth-first walk over budget-feasible subsets in lexicographic order.
template <class Visit>
void walk(const Graph& graph, EdgeId next, Cost remaining, std::vector<EdgeId>& current,
          Visit& visit) {
  for (EdgeId e = next; e <= graph.edge_count(); ++e) {
    const Cost c = graph.edge(e).cost;
    if (c > remaining) continue;
    current.push_back(e);
    visit(current);
    walk(graph, e + 1, remaining - c, current, visit);
    current.pop_back();
  }
}

MedianValue interdicted_value(const Graph& graph, std::span<const EdgeId> edges, int p) {
  return p_median_value(remove_edges(graph, edges).graph, p);
}

SolveResult finish(const Graph& graph, std::vector<EdgeId> edges, int p) {
  SolveResult result;
  result.strategy = InterdictionStrategy(graph, std::move(edges));
  auto response = solve_p_median(remove_edges(graph, result.strategy.edge_ids()).graph, p);
  result.locator_response = std::move(response.facilities);
  result.value = response.value;
  result.algorithm = Algorithm::Oracle;
  return result;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (const auto& [alg, name] : kAlgorithmNames)
    if (alg == a) return name;
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [alg, n] : kAlgorithmNames)
    if (n == name) return alg;
  return std::nullopt;
}

MedianSolution strategy_value(const Graph& graph, const InterdictionStrategy& strategy, int p,
                              Cost budget) {
  check_instance(graph, p, budget);
  if (strategy.total_cost() > budget)
    throw BudgetError("strategy costs " + std::to_string(strategy.total_cost()) +
                      ", budget is " + std::to_string(budget));
  return solve_p_median(remove_edges(graph, strategy.edge_ids()).graph, p);
}

std::vector<std::vector<EdgeId>> feasible_strategies(const Graph& graph, Cost budget) {
  std::vector<std::vector<EdgeId>> out{{}};
  std::vector<EdgeId> current;
  auto collect = [&](const std::vector<EdgeId>& edges) { out.push_back(edges); };
  walk(graph, 1, budget, current, collect);
  return out;
}

SolveResult oracle_serial(const Graph& graph, int p, Cost budget) {
  check_instance(graph, p, budget);
  std::vector<EdgeId> best_edges;
  MedianValue best = interdicted_value(graph, best_edges, p);
  std::vector<EdgeId> current;
  auto consider = [&](const std::vector<EdgeId>& edges) {
    const MedianValue value = interdicted_value(graph, edges, p);
    if (value > best) {
      best = value;
      best_edges = edges;
    }
  };
  walk(graph, 1, budget, current, consider);
  return finish(graph, std::move(best_edges), p);
}

SolveResult oracle(const Graph& graph, int p, Cost budget) {
  check_instance(graph, p, budget);
  const auto strategies = feasible_strategies(graph, budget);
  std::vector<MedianValue> values(strategies.size());
  const auto count = static_cast<std::int64_t>(strategies.size());
#ifdef PMINT_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::int64_t i = 0; i < count; ++i)
    values[static_cast<std::size_t>(i)] =
        interdicted_value(graph, strategies[static_cast<std::size_t>(i)], p);

  // Reduction in list order keeps the lexicographically smallest maximizer.
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return finish(graph, strategies[best], p);
}

}  // namespace pmint
