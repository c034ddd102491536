// Exact p-median on forests.
//
// In a tree there is always an optimal assignment of vertices to facilities
// whose service regions are connected subtrees (nearest facility, ties to the
// smaller id). Root each component and let
//
//   cost[v][k][j] = cheapest cost of the subtree T_v using exactly k
//                   facilities inside T_v, with v served by facility j.
//
// If j lies inside T_v it is one of the k facilities (counted at j itself);
// otherwise j is an outside facility that v's parent also uses. For a child c,
// either c joins v's region (forced when j is inside T_c) or c opens a region
// of its own rooted inside T_c.

#include <algorithm>
#include <limits>

#include "pmint/error.hpp"
#include "pmint/median.hpp"

namespace pmint {

namespace {

using Cost64 = std::int64_t;
constexpr Cost64 kInf = std::numeric_limits<Cost64>::max() / 4;

Cost64 add(Cost64 a, Cost64 b) { return (a >= kInf || b >= kInf) ? kInf : std::min(kInf, a + b); }

enum class Mark : unsigned char { Free, Forced, Forbidden };

/// k-median optimum of one tree for every k in 0..max_k under facility marks.
class TreeMedianTable {
public:
  TreeMedianTable(const Graph& tree, int max_k)
      : size_(tree.vertex_count()), max_k_(max_k), dist_(tree), rooted_(root_tree(tree, 1)) {}

  std::vector<Cost64> solve(const VertexMap<Mark>& marks) const {
    const VertexId s = size_;
    const int kmax = std::min<int>(max_k_, s);
    const auto width = static_cast<std::size_t>(kmax + 1);
    // cost[(v-1) * s + (j-1)][k], flattened.
    std::vector<Cost64> cost(static_cast<std::size_t>(s) * static_cast<std::size_t>(s) * width, kInf);
    std::vector<Cost64> best(static_cast<std::size_t>(s) * width, kInf);
    auto cell = [&](VertexId v, VertexId j) {
      return cost.begin() + static_cast<std::ptrdiff_t>(((v - 1) * s + (j - 1)) * static_cast<std::ptrdiff_t>(width));
    };
    auto best_row = [&](VertexId v) {
      return best.begin() + static_cast<std::ptrdiff_t>((v - 1) * static_cast<std::ptrdiff_t>(width));
    };

    std::vector<Cost64> acc(width), next(width), option(width);
    const auto order = rooted_.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      const int size_v = std::min<int>(kmax, rooted_.subtree_size(v));
      for (VertexId j = 1; j <= s; ++j) {
        if (j == v && marks[v] == Mark::Forbidden) continue;
        if (j != v && marks[v] == Mark::Forced) continue;
        if (j != v && rooted_.in_subtree(j, v) && marks[j] == Mark::Forbidden) continue;
        std::fill(acc.begin(), acc.end(), kInf);
        int reach = j == v ? 1 : 0;
        acc[static_cast<std::size_t>(reach)] = dist_.at(v, j);
        for (VertexId c : rooted_.children(v)) {
          const bool inside = rooted_.in_subtree(j, c);
          const int size_c = std::min<int>(kmax, rooted_.subtree_size(c));
          const auto joined = cell(c, j);
          const auto own = best_row(c);
          for (int k = 0; k <= size_c; ++k)
            option[static_cast<std::size_t>(k)] =
                inside ? joined[k] : std::min(joined[k], own[k]);
          std::fill(next.begin(), next.end(), kInf);
          for (int a = 0; a <= reach; ++a) {
            if (acc[static_cast<std::size_t>(a)] >= kInf) continue;
            for (int b = 0; b <= size_c && a + b <= kmax; ++b) {
              auto& slot = next[static_cast<std::size_t>(a + b)];
              slot = std::min(slot, add(acc[static_cast<std::size_t>(a)], option[static_cast<std::size_t>(b)]));
            }
          }
          reach = std::min(kmax, reach + size_c);
          acc.swap(next);
        }
        std::copy(acc.begin(), acc.begin() + size_v + 1, cell(v, j));
        if (rooted_.in_subtree(j, v)) {
          auto row = best_row(v);
          for (int k = 0; k <= size_v; ++k) row[k] = std::min(row[k], acc[static_cast<std::size_t>(k)]);
        }
      }
    }
    auto root = best_row(rooted_.root());
    return std::vector<Cost64>(root, root + static_cast<std::ptrdiff_t>(width));
  }

private:
  VertexId size_;
  int max_k_;
  DistanceMatrix dist_;
  RootedTree rooted_;
};

/// Splits a forest into trees and combines their k-median tables.
class ForestMedian {
public:
  ForestMedian(const Graph& forest, int p) : p_(p), parts_(components(forest)) {
    if (!forest.is_forest()) throw ShapeError("forest p-median: graph has a cycle");
    if (p < 1 || p > forest.vertex_count())
      throw InputError("p = " + std::to_string(p) + " outside 1.." +
                       std::to_string(forest.vertex_count()));
    const int max_k = p - static_cast<int>(parts_.size()) + 1;
    for (const Component& part : parts_) {
      tables_.emplace_back(part.graph, std::max(max_k, 1));
      marks_.emplace_back(part.graph.vertex_count(), Mark::Free);
    }
    label_ = VertexMap<std::size_t>(forest.vertex_count(), 0);
    local_ = VertexMap<VertexId>(forest.vertex_count(), 0);
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      const auto& verts = parts_[c].vertices;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        label_[verts[i]] = c;
        local_[verts[i]] = static_cast<VertexId>(i + 1);
      }
    }
    if (feasible()) {
      for (std::size_t c = 0; c < parts_.size(); ++c) values_.push_back(tables_[c].solve(marks_[c]));
    }
  }

  bool feasible() const { return static_cast<int>(parts_.size()) <= p_; }

  MedianValue value() const { return combine(values_); }

  void mark(VertexId v, Mark m) {
    const std::size_t c = label_[v];
    marks_[c][local_[v]] = m;
    values_[c] = tables_[c].solve(marks_[c]);
  }

private:
  /// Every tree needs at least one facility; distribute exactly p.
  MedianValue combine(const std::vector<std::vector<Cost64>>& per_part) const {
    std::vector<Cost64> acc(static_cast<std::size_t>(p_) + 1, kInf);
    acc[0] = 0;
    for (const auto& table : per_part) {
      std::vector<Cost64> next(acc.size(), kInf);
      for (int a = 0; a <= p_; ++a) {
        if (acc[static_cast<std::size_t>(a)] >= kInf) continue;
        for (int k = 1; k < static_cast<int>(table.size()) && a + k <= p_; ++k) {
          auto& slot = next[static_cast<std::size_t>(a + k)];
          slot = std::min(slot, add(acc[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(k)]));
        }
      }
      acc.swap(next);
    }
    const Cost64 total = acc[static_cast<std::size_t>(p_)];
    return total >= kInf ? MedianValue::infeasible() : MedianValue(total);
  }

  int p_;
  std::vector<Component> parts_;
  std::vector<TreeMedianTable> tables_;
  std::vector<VertexMap<Mark>> marks_;
  std::vector<std::vector<Cost64>> values_;
  VertexMap<std::size_t> label_;
  VertexMap<VertexId> local_;
};

}  // namespace

MedianValue p_median_forest_value(const Graph& forest, int p) {
  const ForestMedian solver(forest, p);
  return solver.feasible() ? solver.value() : MedianValue::infeasible();
}

MedianSolution solve_p_median_forest(const Graph& forest, int p) {
  ForestMedian solver(forest, p);
  const VertexId n = forest.vertex_count();
  if (!solver.feasible()) {
    std::vector<VertexId> first(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) first[static_cast<std::size_t>(i)] = i + 1;
    return {FacilitySet(std::move(first)), MedianValue::infeasible()};
  }
  const MedianValue optimum = solver.value();
  // Lexicographically smallest optimum: take each vertex in turn whenever an
  // optimal solution extending the current choice still contains it.
  std::vector<VertexId> chosen;
  for (VertexId v = 1; v <= n && static_cast<int>(chosen.size()) < p; ++v) {
    if (n - v + 1 == p - static_cast<int>(chosen.size())) {
      for (VertexId w = v; w <= n; ++w) chosen.push_back(w);
      break;
    }
    solver.mark(v, Mark::Forced);
    if (solver.value() == optimum) {
      chosen.push_back(v);
    } else {
      solver.mark(v, Mark::Forbidden);
    }
  }
  return {FacilitySet(std::move(chosen)), optimum};
}

}  // namespace pmint
