#include "pmint/median.hpp"

#include <algorithm>
#include <queue>

#include "pmint/error.hpp"

namespace pmint {

FacilitySet::FacilitySet(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool FacilitySet::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string MedianValue::to_string() const {
  return infeasible_ ? "INFEASIBLE" : std::to_string(value_);
}

MedianValue objective(const Graph& graph, const FacilitySet& facilities) {
  if (facilities.vertices().empty()) throw InputError("facility set is empty");
  for (VertexId x : facilities.vertices())
    if (x < 1 || x > graph.vertex_count())
      throw InputError("facility " + std::to_string(x) + " out of range");
  const auto dist = distances_from_set(graph, facilities.vertices());
  std::int64_t total = 0;
  for (Distance d : dist.values()) {
    if (d == kUnreachable) return MedianValue::infeasible();
    total += d;
  }
  return MedianValue(total);
}

namespace {

void check_p(const Graph& graph, int p) {
  if (p < 1 || p > graph.vertex_count())
    throw InputError("p = " + std::to_string(p) + " outside 1.." +
                     std::to_string(graph.vertex_count()));
}

/// Sum over vertices of the nearest chosen facility, given distance rows.
MedianValue evaluate(const DistanceMatrix& dist, std::span<const VertexId> chosen) {
  const VertexId n = dist.size();
  std::int64_t total = 0;
  for (VertexId v = 1; v <= n; ++v) {
    Distance best = kUnreachable;
    for (VertexId x : chosen) best = std::min(best, dist.at(x, v));
    if (best == kUnreachable) return MedianValue::infeasible();
    total += best;
  }
  return MedianValue(total);
}

/// Lexicographic enumeration of p-subsets whose smallest element is `first`.
/// Keeps the first strict improvement, i.e. the lexicographic minimum.
MedianSolution best_with_first(const DistanceMatrix& dist, int p, VertexId first) {
  const VertexId n = dist.size();
  std::vector<VertexId> chosen(static_cast<std::size_t>(p));
  chosen[0] = first;
  for (int i = 1; i < p; ++i) chosen[static_cast<std::size_t>(i)] = first + i;

  MedianSolution best{FacilitySet(chosen), evaluate(dist, chosen)};
  if (p == 1) return best;
  while (true) {
    // Advance the tail (positions 1..p-1) to the next combination.
    int i = p - 1;
    while (i >= 1 && chosen[static_cast<std::size_t>(i)] == n - (p - 1 - i)) --i;
    if (i < 1) break;
    ++chosen[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
    const MedianValue value = evaluate(dist, chosen);
    if (value < best.value) best = {FacilitySet(chosen), value};
  }
  return best;
}

MedianSolution pick(std::vector<MedianSolution>& per_first) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_first.size(); ++i)
    if (per_first[i].value < per_first[best].value) best = i;
  return std::move(per_first[best]);
}

}  // namespace

MedianSolution solve_p_median_enum_serial(const Graph& graph, int p) {
  check_p(graph, p);
  const DistanceMatrix dist(graph);
  const VertexId last_first = graph.vertex_count() - p + 1;
  std::vector<MedianSolution> per_first;
  for (VertexId first = 1; first <= last_first; ++first)
    per_first.push_back(best_with_first(dist, p, first));
  return pick(per_first);
}

MedianSolution solve_p_median_enum(const Graph& graph, int p) {
  check_p(graph, p);
  const DistanceMatrix dist(graph);
  const VertexId last_first = graph.vertex_count() - p + 1;
  std::vector<MedianSolution> per_first(static_cast<std::size_t>(last_first));
#ifdef PMINT_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (VertexId first = 1; first <= last_first; ++first)
    per_first[static_cast<std::size_t>(first - 1)] = best_with_first(dist, p, first);
  return pick(per_first);
}

MedianSolution solve_p_median(const Graph& graph, int p) {
  return graph.is_forest() ? solve_p_median_forest(graph, p) : solve_p_median_enum_serial(graph, p);
}

MedianValue p_median_value(const Graph& graph, int p) {
  return graph.is_forest() ? p_median_forest_value(graph, p)
                           : solve_p_median_enum_serial(graph, p).value;
}

VertexId goldman_1_median(const Graph& tree) {
  if (!is_tree(classify(tree))) throw ShapeError("goldman_1_median: graph is not a tree");
  const VertexId n = tree.vertex_count();
  VertexMap<std::int64_t> weight(n, 1);
  VertexMap<int> degree(n, 0);
  VertexMap<char> deleted(n, 0);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 1; v <= n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) leaves.push(v);
  }
  while (true) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    if (2 * weight[leaf] >= n) return leaf;
    deleted[leaf] = 1;
    for (const Incidence& inc : tree.incident(leaf)) {
      if (deleted[inc.neighbor]) continue;
      weight[inc.neighbor] += weight[leaf];
      if (--degree[inc.neighbor] <= 1) leaves.push(inc.neighbor);
    }
  }
}

OneMedianTable all_vertex_1median_values(const Graph& tree) {
  const RootedTree rooted = root_tree(tree, 1);
  const VertexId n = tree.vertex_count();
  OneMedianTable table;
  table.values = VertexMap<std::int64_t>(n, 0);

  std::int64_t at_root = 0;
  for (VertexId v = 1; v <= n; ++v) at_root += rooted.depth(v);
  table.values[rooted.root()] = at_root;
  // Moving the facility across edge (parent, v) brings |T_v| vertices closer
  // and pushes the other n - |T_v| farther away.
  for (VertexId v : rooted.preorder()) {
    if (v == rooted.root()) continue;
    const Length len = tree.edge(rooted.parent_edge(v)).length;
    table.values[v] = table.values[rooted.parent(v)] +
                      len * (n - 2 * static_cast<std::int64_t>(rooted.subtree_size(v)));
  }
  table.optimum = *std::min_element(table.values.values().begin(), table.values.values().end());
  for (VertexId v = 1; v <= n; ++v)
    if (table.values[v] == table.optimum) table.optimal.push_back(v);
  return table;
}

PathMedian unit_path_1median(std::int64_t n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  PathMedian out;
  if (n % 2 == 0) {
    out.value = n * n / 4;
    out.optimal = {static_cast<VertexId>(n / 2), static_cast<VertexId>(n / 2 + 1)};
  } else {
    out.value = (n * n - 1) / 4;
    out.optimal = {static_cast<VertexId>((n + 1) / 2)};
  }
  return out;
}

}  // namespace pmint
