#ifndef PMINT_REDUCTION_HPP
#define PMINT_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pmint/graph.hpp"

namespace pmint {

/// Equal-cardinality, equal-sum partition of nonnegative weights.
struct PartitionInstance {
  std::vector<std::int64_t> weights;

  std::int64_t total() const;
};

/// 0/1 knapsack whose profits differ by at most a factor of two.
struct KnapsackInstance {
  struct Item {
    std::int64_t weight = 1;
    std::int64_t profit = 1;
    friend bool operator==(const Item&, const Item&) = default;
  };
  std::vector<Item> items;
  std::int64_t capacity = 0;  // W
  std::int64_t target = 0;    // P

  /// max profit <= 2 * min profit
  bool has_bounded_profit_ratio() const;
  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

/// Interdiction instance encoding a knapsack: hub vertex 1, a two-vertex
/// path above it (vertices 2, 3) and one four-vertex path per item. Only the
/// hub-to-item edges are affordable; cutting item i's edge isolates a path
/// that costs the locator exactly profit_i.
struct GadgetInstance {
  Graph graph;
  int p = 1;
  Cost budget = 0;
  std::int64_t threshold = 0;     // K
  std::vector<EdgeId> item_edge;  // item i (0-based) -> interdictable edge
  KnapsackInstance source;
};

/// p_i = w_i = w~_i + B~ + 1 and W = P = B~/2 + (n/2)(B~ + 1).
KnapsackInstance partition_to_kbpr2(const PartitionInstance& inst);

GadgetInstance kbpr2_to_gadget(const KnapsackInstance& inst);

struct KnapsackSolution {
  std::vector<int> items;  // 1-based, ascending
  std::int64_t weight = 0;
  std::int64_t profit = 0;
  bool meets_target = false;
};

/// Exhaustive over 2^m subsets; m <= 20.
KnapsackSolution solve_kbpr2_brute(const KnapsackInstance& inst);

/// Lexicographically first half-size index set (1-based) summing to half
/// the total, or nullopt. n <= 20.
std::optional<std::vector<int>> solve_partition_brute(const PartitionInstance& inst);

}  // namespace pmint

#endif  // PMINT_REDUCTION_HPP
