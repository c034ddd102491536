#include <algorithm>
#include <numeric>

#include "pmint/error.hpp"
#include "pmint/interdiction.hpp"

namespace pmint {

namespace {

/// Cut positions and facility positions along a path, 1-based.
struct PathPlan {
  std::vector<EdgeId> cuts;
  std::vector<VertexId> facilities;
  std::int64_t value = 0;
};

std::int64_t dot(std::span<const std::int64_t> a, std::span<const Length> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

/// Segment medians: the middle vertex (lower one for even sizes) of each
/// piece left after cutting the given path positions.
PathPlan price_cuts(std::span<const Length> lengths, std::vector<EdgeId> cuts) {
  const auto n = static_cast<VertexId>(lengths.size() + 1);
  PathPlan plan;
  VertexId start = 1;
  auto close_segment = [&](VertexId end) {
    const VertexId k = end - start + 1;
    const auto crossing = crossing_vector(k);
    plan.value += dot(crossing, lengths.subspan(static_cast<std::size_t>(start - 1),
                                                static_cast<std::size_t>(k - 1)));
    plan.facilities.push_back(start + (k + 1) / 2 - 1);
  };
  for (EdgeId t : cuts) {
    close_segment(t);
    start = t + 1;
  }
  close_segment(n);
  plan.cuts = std::move(cuts);
  return plan;
}

void check_path_budget(std::int64_t n, std::int64_t budget) {
  if (n < 1) throw InputError("path needs at least one vertex");
  if (budget < 0 || budget > n - 1)
    throw InputError("budget " + std::to_string(budget) + " outside 0.." + std::to_string(n - 1));
}

Graph path_graph(std::span<const Length> lengths) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    edges.push_back({static_cast<VertexId>(i + 1), static_cast<VertexId>(i + 2), lengths[i], 1});
  return Graph(static_cast<VertexId>(lengths.size() + 1), std::move(edges));
}

SolveResult to_result(const Graph& graph, const PathPlan& plan, Algorithm algorithm) {
  SolveResult result;
  result.strategy = InterdictionStrategy(graph, plan.cuts);
  result.locator_response = FacilitySet(plan.facilities);
  result.value = MedianValue(plan.value);
  result.algorithm = algorithm;
  return result;
}

PathPlan plan_unit(std::int64_t n, std::int64_t budget) {
  check_path_budget(n, budget);
  PathPlan plan;
  for (EdgeId t = 1; t <= budget; ++t) {
    plan.cuts.push_back(t);
    plan.facilities.push_back(t);
  }
  const PathMedian rest = unit_path_1median(n - budget);
  plan.facilities.push_back(static_cast<VertexId>(budget) + rest.optimal.front());
  plan.value = rest.value;
  return plan;
}

PathPlan plan_arbitrary(std::span<const Length> lengths, std::int64_t budget) {
  const auto n = static_cast<std::int64_t>(lengths.size()) + 1;
  check_path_budget(n, budget);
  for (Length l : lengths)
    if (l < 0) throw InputError("negative edge length");
  if (budget == 0) return price_cuts(lengths, {});

  if (budget == 1) {
    const auto matrix = interdiction_matrix(n);
    EdgeId best = 1;
    std::int64_t best_value = -1;
    for (std::size_t t = 0; t < matrix.size(); ++t) {
      const std::int64_t value = dot(matrix[t], lengths);
      if (value > best_value) {
        best_value = value;
        best = static_cast<EdgeId>(t + 1);
      }
    }
    return price_cuts(lengths, {best});
  }

  // Every cut set of size `budget`, in lexicographic order.
  const auto m = static_cast<EdgeId>(n - 1);
  const auto b = static_cast<int>(budget);
  std::vector<EdgeId> cuts(static_cast<std::size_t>(b));
  std::iota(cuts.begin(), cuts.end(), 1);
  PathPlan best = price_cuts(lengths, cuts);
  while (true) {
    int i = b - 1;
    while (i >= 0 && cuts[static_cast<std::size_t>(i)] == m - (b - 1 - i)) --i;
    if (i < 0) break;
    ++cuts[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < b; ++j)
      cuts[static_cast<std::size_t>(j)] = cuts[static_cast<std::size_t>(j - 1)] + 1;
    PathPlan candidate = price_cuts(lengths, cuts);
    if (candidate.value > best.value) best = std::move(candidate);
  }
  return best;
}

/// Lengths along the path order and the edge ids behind each position.
struct PathView {
  std::vector<VertexId> order;
  std::vector<EdgeId> edge_at;
  std::vector<Length> lengths;
};

PathView view_path(const Graph& graph) {
  auto shape = classify(graph);
  if (!is_path(shape)) throw ShapeError("graph is not a path");
  PathView view;
  view.order = std::get<PathShape>(shape).order;
  for (std::size_t i = 0; i + 1 < view.order.size(); ++i) {
    const EdgeId e = graph.find_edge(view.order[i], view.order[i + 1]);
    view.edge_at.push_back(e);
    view.lengths.push_back(graph.edge(e).length);
  }
  return view;
}

SolveResult map_to_graph(const Graph& graph, const PathView& view, const PathPlan& plan,
                         Algorithm algorithm) {
  PathPlan mapped = plan;
  for (EdgeId& e : mapped.cuts) e = view.edge_at[static_cast<std::size_t>(e - 1)];
  for (VertexId& v : mapped.facilities) v = view.order[static_cast<std::size_t>(v - 1)];
  return to_result(graph, mapped, algorithm);
}

std::optional<std::string> path_common_violation(const Graph& graph, int p, Cost budget) {
  if (!is_path(classify(graph))) return "graph is not a path";
  if (!graph.has_unit_costs()) return "interdiction costs are not all 1";
  if (budget < 0 || budget > graph.vertex_count() - 1)
    return "budget must lie in 0..n-1";
  if (p != budget + 1) return "p must equal budget + 1";
  return std::nullopt;
}

}  // namespace

std::vector<std::int64_t> crossing_vector(std::int64_t k) {
  std::vector<std::int64_t> s;
  for (std::int64_t i = 1; i < k; ++i) s.push_back(std::min(i, k - i));
  return s;
}

InterdictionMatrix interdiction_matrix(std::int64_t n) {
  if (n < 2) throw InputError("interdiction matrix needs at least two vertices");
  InterdictionMatrix rows;
  for (std::int64_t t = 1; t <= n - 1; ++t) {
    auto row = crossing_vector(t);
    row.push_back(0);
    const auto right = crossing_vector(n - t);
    row.insert(row.end(), right.begin(), right.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

SolveResult solve_path_unit(std::int64_t n, std::int64_t budget) {
  const PathPlan plan = plan_unit(n, budget);
  const std::vector<Length> ones(static_cast<std::size_t>(n - 1), 1);
  return to_result(path_graph(ones), plan, Algorithm::PathUnit);
}

SolveResult solve_path_arbitrary(std::span<const Length> lengths, std::int64_t budget) {
  const PathPlan plan = plan_arbitrary(lengths, budget);
  return to_result(path_graph(lengths), plan, Algorithm::PathMatrix);
}

std::optional<std::string> path_unit_violation(const Graph& graph, int p, Cost budget) {
  if (auto why = path_common_violation(graph, p, budget)) return why;
  if (!graph.has_unit_lengths()) return "edge lengths are not all 1";
  return std::nullopt;
}

std::optional<std::string> path_matrix_violation(const Graph& graph, int p, Cost budget) {
  return path_common_violation(graph, p, budget);
}

SolveResult solve_path_unit(const Graph& graph, int p, Cost budget) {
  if (auto why = path_unit_violation(graph, p, budget)) {
    if (!is_path(classify(graph))) throw ShapeError("path-unit: " + *why);
    throw PreconditionError("path-unit: " + *why);
  }
  const PathView view = view_path(graph);
  return map_to_graph(graph, view, plan_unit(graph.vertex_count(), budget), Algorithm::PathUnit);
}

SolveResult solve_path_arbitrary(const Graph& graph, int p, Cost budget) {
  if (auto why = path_matrix_violation(graph, p, budget)) {
    if (!is_path(classify(graph))) throw ShapeError("path-matrix: " + *why);
    throw PreconditionError("path-matrix: " + *why);
  }
  const PathView view = view_path(graph);
  return map_to_graph(graph, view, plan_arbitrary(view.lengths, budget), Algorithm::PathMatrix);
}

}  // namespace pmint
