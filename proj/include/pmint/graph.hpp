#ifndef PMINT_GRAPH_HPP
#define PMINT_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace pmint {

/// Vertices are numbered 1..n, edges 1..m (position in the edge list).
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Length = std::int64_t;
using Cost = std::int64_t;
using Distance = std::int64_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Dense per-vertex storage addressed by 1-based vertex id.
template <class T>
class VertexMap {
public:
  VertexMap() = default;
  VertexMap(VertexId n, const T& init) : data_(static_cast<std::size_t>(n), init) {}

  T& operator[](VertexId v) { return data_[static_cast<std::size_t>(v - 1)]; }
  const T& operator[](VertexId v) const { return data_[static_cast<std::size_t>(v - 1)]; }

  VertexId size() const { return static_cast<VertexId>(data_.size()); }
  const std::vector<T>& values() const { return data_; }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

private:
  std::vector<T> data_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Length length = 1;
  Cost cost = 1;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Undirected graph with edge lengths and interdiction costs. Immutable once
/// built; the constructor rejects self-loops, parallel edges, out-of-range
/// endpoints, negative lengths and costs below 1.
class Graph {
public:
  Graph() = default;
  Graph(VertexId n, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e - 1)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }

  /// Acyclic (possibly disconnected).
  bool is_forest() const { return forest_; }
  bool has_unit_lengths() const;
  bool has_unit_costs() const;

  /// Edge id joining u and v, or 0 when they are not adjacent.
  EdgeId find_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  VertexMap<std::vector<Incidence>> adjacency_;
  bool forest_ = true;
};

struct PathShape {
  std::vector<VertexId> order;  // endpoint to endpoint
};
struct TreeShape {};
struct GeneralShape {};
struct DisconnectedShape {};

using GraphShape = std::variant<PathShape, TreeShape, GeneralShape, DisconnectedShape>;

GraphShape classify(const Graph& graph);

inline bool is_path(const GraphShape& s) { return std::holds_alternative<PathShape>(s); }
/// Paths count as trees.
inline bool is_tree(const GraphShape& s) {
  return std::holds_alternative<PathShape>(s) || std::holds_alternative<TreeShape>(s);
}

/// Single-source shortest distances; kUnreachable marks other components.
VertexMap<Distance> distances_from(const Graph& graph, VertexId source);

/// Distances to the nearest of several sources.
VertexMap<Distance> distances_from_set(const Graph& graph, std::span<const VertexId> sources);

/// All-pairs distances, row-major: at(u, v).
class DistanceMatrix {
public:
  explicit DistanceMatrix(const Graph& graph);

  Distance at(VertexId u, VertexId v) const {
    return data_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(v - 1)];
  }
  VertexId size() const { return n_; }

private:
  VertexId n_;
  std::vector<Distance> data_;
};

/// Result of deleting edges: the new graph keeps every vertex; its edge i
/// corresponds to original_edge[i - 1] of the source graph.
struct EdgeDeletion {
  Graph graph;
  std::vector<EdgeId> original_edge;
};

EdgeDeletion remove_edges(const Graph& graph, std::span<const EdgeId> edge_ids);

/// A connected component as an induced subgraph with local ids 1..k.
struct Component {
  std::vector<VertexId> vertices;  // local id i maps to vertices[i - 1], ascending
  std::vector<EdgeId> edges;       // local edge i maps to edges[i - 1]
  Graph graph;
};

/// Components ordered by smallest contained vertex id.
std::vector<Component> components(const Graph& graph);

/// Component label (0-based, same order as components()) per vertex.
VertexMap<int> component_labels(const Graph& graph);

class RootedTree {
public:
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  VertexId subtree_size(VertexId v) const { return subtree_size_[v]; }
  Distance depth(VertexId v) const { return depth_[v]; }
  int hops(VertexId v) const { return hops_[v]; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  /// Parents precede children.
  std::span<const VertexId> preorder() const { return preorder_; }
  /// True when v lies in the subtree rooted at u.
  bool in_subtree(VertexId v, VertexId u) const {
    return enter_[u] <= enter_[v] && enter_[v] < enter_[u] + subtree_size_[u];
  }

private:
  friend RootedTree root_tree(const Graph& tree, VertexId root);

  VertexId root_ = 0;
  VertexMap<VertexId> parent_;
  VertexMap<EdgeId> parent_edge_;
  VertexMap<VertexId> subtree_size_;
  VertexMap<Distance> depth_;
  VertexMap<int> hops_;
  VertexMap<int> enter_;
  VertexMap<std::vector<VertexId>> children_;
  std::vector<VertexId> preorder_;
};

/// Throws ShapeError unless the graph is a tree (paths included).
RootedTree root_tree(const Graph& tree, VertexId root);

}  // namespace pmint

#endif  // PMINT_GRAPH_HPP
