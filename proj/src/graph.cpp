#include "pmint/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "pmint/error.hpp"

namespace pmint {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(VertexId n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

private:
  std::vector<VertexId> parent_;
};

std::string edge_label(std::size_t index, const Edge& e) {
  return "edge " + std::to_string(index + 1) + " (" + std::to_string(e.u) + "," +
         std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n, {}) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  std::set<std::pair<VertexId, VertexId>> seen;
  DisjointSets sets(n);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw InputError(edge_label(i, e) + ": endpoint out of range 1.." + std::to_string(n));
    if (e.u == e.v) throw InputError(edge_label(i, e) + ": self-loop");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw InputError(edge_label(i, e) + ": parallel edge");
    if (e.length < 0) throw InputError(edge_label(i, e) + ": negative length");
    if (e.cost < 1) throw InputError(edge_label(i, e) + ": cost must be at least 1");
    const auto id = static_cast<EdgeId>(i + 1);
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
    if (!sets.unite(e.u, e.v)) forest_ = false;
  }
}

bool Graph::has_unit_lengths() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.length == 1; });
}

bool Graph::has_unit_costs() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.cost == 1; });
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  for (const Incidence& inc : adjacency_[u])
    if (inc.neighbor == v) return inc.edge;
  return 0;
}

GraphShape classify(const Graph& graph) {
  const VertexId n = graph.vertex_count();
  const auto labels = component_labels(graph);
  for (VertexId v = 1; v <= n; ++v)
    if (labels[v] != 0) return DisconnectedShape{};
  if (graph.edge_count() != n - 1) return GeneralShape{};

  for (VertexId v = 1; v <= n; ++v)
    if (graph.degree(v) > 2) return TreeShape{};

  PathShape path;
  VertexId start = 1;
  for (VertexId v = 1; v <= n; ++v) {
    if (graph.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  path.order.reserve(static_cast<std::size_t>(n));
  VertexId prev = 0;
  VertexId cur = start;
  while (true) {
    path.order.push_back(cur);
    VertexId next = 0;
    for (const Incidence& inc : graph.incident(cur))
      if (inc.neighbor != prev) next = inc.neighbor;
    if (next == 0) break;
    prev = cur;
    cur = next;
  }
  return path;
}

VertexMap<Distance> distances_from(const Graph& graph, VertexId source) {
  if (source < 1 || source > graph.vertex_count())
    throw InputError("source vertex " + std::to_string(source) + " out of range");
  return distances_from_set(graph, std::span<const VertexId>(&source, 1));
}

VertexMap<Distance> distances_from_set(const Graph& graph, std::span<const VertexId> sources) {
  VertexMap<Distance> dist(graph.vertex_count(), kUnreachable);
  if (graph.is_forest() && sources.size() == 1) {
    // One traversal: paths in a forest are unique.
    std::vector<VertexId> stack{sources.front()};
    dist[sources.front()] = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : graph.incident(v)) {
        if (dist[inc.neighbor] != kUnreachable) continue;
        dist[inc.neighbor] = dist[v] + graph.edge(inc.edge).length;
        stack.push_back(inc.neighbor);
      }
    }
    return dist;
  }

  using Entry = std::pair<Distance, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (VertexId s : sources) {
    if (s < 1 || s > graph.vertex_count())
      throw InputError("source vertex " + std::to_string(s) + " out of range");
    dist[s] = 0;
    heap.emplace(0, s);
  }
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (const Incidence& inc : graph.incident(v)) {
      const Distance nd = d + graph.edge(inc.edge).length;
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        heap.emplace(nd, inc.neighbor);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& graph)
    : n_(graph.vertex_count()),
      data_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
  for (VertexId u = 1; u <= n_; ++u) {
    const auto row = distances_from(graph, u);
    std::copy(row.values().begin(), row.values().end(),
              data_.begin() + static_cast<std::ptrdiff_t>(u - 1) * n_);
  }
}

EdgeDeletion remove_edges(const Graph& graph, std::span<const EdgeId> edge_ids) {
  std::vector<bool> removed(static_cast<std::size_t>(graph.edge_count()) + 1, false);
  for (EdgeId e : edge_ids) {
    if (e < 1 || e > graph.edge_count())
      throw InputError("unknown edge id " + std::to_string(e));
    if (removed[e]) throw InputError("edge id " + std::to_string(e) + " listed twice");
    removed[e] = true;
  }
  EdgeDeletion out;
  std::vector<Edge> kept;
  for (EdgeId e = 1; e <= graph.edge_count(); ++e) {
    if (removed[e]) continue;
    kept.push_back(graph.edge(e));
    out.original_edge.push_back(e);
  }
  out.graph = Graph(graph.vertex_count(), std::move(kept));
  return out;
}

VertexMap<int> component_labels(const Graph& graph) {
  const VertexId n = graph.vertex_count();
  VertexMap<int> label(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 1; s <= n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : graph.incident(v)) {
        if (label[inc.neighbor] >= 0) continue;
        label[inc.neighbor] = next;
        stack.push_back(inc.neighbor);
      }
    }
    ++next;
  }
  return label;
}

std::vector<Component> components(const Graph& graph) {
  const auto label = component_labels(graph);
  int count = 0;
  for (int l : label.values()) count = std::max(count, l + 1);

  std::vector<Component> out(static_cast<std::size_t>(count));
  VertexMap<VertexId> local(graph.vertex_count(), 0);
  for (VertexId v = 1; v <= graph.vertex_count(); ++v) {
    auto& comp = out[static_cast<std::size_t>(label[v])];
    comp.vertices.push_back(v);
    local[v] = static_cast<VertexId>(comp.vertices.size());
  }
  std::vector<std::vector<Edge>> local_edges(out.size());
  for (EdgeId e = 1; e <= graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    const auto c = static_cast<std::size_t>(label[edge.u]);
    local_edges[c].push_back({local[edge.u], local[edge.v], edge.length, edge.cost});
    out[c].edges.push_back(e);
  }
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c].graph = Graph(static_cast<VertexId>(out[c].vertices.size()), std::move(local_edges[c]));
  return out;
}

RootedTree root_tree(const Graph& tree, VertexId root) {
  const VertexId n = tree.vertex_count();
  if (root < 1 || root > n) throw InputError("root " + std::to_string(root) + " out of range");
  if (!is_tree(classify(tree))) throw ShapeError("root_tree: graph is not a tree");

  RootedTree t;
  t.root_ = root;
  t.parent_ = VertexMap<VertexId>(n, 0);
  t.parent_edge_ = VertexMap<EdgeId>(n, 0);
  t.subtree_size_ = VertexMap<VertexId>(n, 1);
  t.depth_ = VertexMap<Distance>(n, 0);
  t.hops_ = VertexMap<int>(n, 0);
  t.enter_ = VertexMap<int>(n, 0);
  t.children_ = VertexMap<std::vector<VertexId>>(n, {});
  t.preorder_.reserve(static_cast<std::size_t>(n));

  // Iterative DFS so the preorder is also an Euler-tour entry order; children
  // are visited in ascending id.
  t.parent_[root] = root;
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    t.enter_[v] = static_cast<int>(t.preorder_.size());
    t.preorder_.push_back(v);
    std::vector<VertexId> kids;
    for (const Incidence& inc : tree.incident(v)) {
      if (inc.neighbor == t.parent_[v] && v != root) continue;
      t.parent_[inc.neighbor] = v;
      t.parent_edge_[inc.neighbor] = inc.edge;
      t.depth_[inc.neighbor] = t.depth_[v] + tree.edge(inc.edge).length;
      t.hops_[inc.neighbor] = t.hops_[v] + 1;
      kids.push_back(inc.neighbor);
    }
    std::sort(kids.begin(), kids.end());
    t.children_[v] = kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (auto it = t.preorder_.rbegin(); it != t.preorder_.rend(); ++it)
    if (*it != root) t.subtree_size_[t.parent_[*it]] += t.subtree_size_[*it];
  return t;
}

}  // namespace pmint
