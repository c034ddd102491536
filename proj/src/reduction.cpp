#include "pmint/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pmint/error.hpp"

namespace pmint {

namespace {
constexpr std::size_t kMaxBruteItems = 20;
}

std::int64_t PartitionInstance::total() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

bool KnapsackInstance::has_bounded_profit_ratio() const {
  if (items.empty()) return true;
  const auto [lo, hi] = std::minmax_element(
      items.begin(), items.end(), [](const Item& a, const Item& b) { return a.profit < b.profit; });
  return hi->profit <= 2 * lo->profit;
}

KnapsackInstance partition_to_kbpr2(const PartitionInstance& inst) {
  for (std::int64_t w : inst.weights)
    if (w < 0) throw InputError("partition weights must be nonnegative");
  if (inst.weights.size() % 2 != 0)
    throw InputError("partition needs an even number of weights");
  const std::int64_t total = inst.total();
  if (total % 2 != 0) throw InputError("partition weights must have an even total");

  KnapsackInstance out;
  for (std::int64_t w : inst.weights) out.items.push_back({w + total + 1, w + total + 1});
  const auto half_n = static_cast<std::int64_t>(inst.weights.size() / 2);
  out.capacity = total / 2 + half_n * (total + 1);
  out.target = out.capacity;
  return out;
}

GadgetInstance kbpr2_to_gadget(const KnapsackInstance& inst) {
  for (const auto& item : inst.items)
    if (item.weight < 1 || item.profit < 1)
      throw InputError("knapsack weights and profits must be positive");
  if (!inst.has_bounded_profit_ratio())
    throw InputError("knapsack profits differ by more than a factor of two");
  if (inst.capacity < 0 || inst.target < 0)
    throw InputError("knapsack capacity and target must be nonnegative");

  const Cost budget = inst.capacity;
  const Cost blocked = budget + 1;
  const auto m = static_cast<VertexId>(inst.items.size());
  constexpr VertexId hub = 1;

  GadgetInstance out;
  std::vector<Edge> edges{{hub, 2, 0, blocked}, {2, 3, 0, blocked}};
  for (VertexId i = 0; i < m; ++i) {
    const auto& item = inst.items[static_cast<std::size_t>(i)];
    const VertexId a = 4 + 4 * i;
    out.item_edge.push_back(static_cast<EdgeId>(edges.size() + 1));
    edges.push_back({hub, a, 0, item.weight});
    edges.push_back({a, a + 1, item.profit, blocked});
    edges.push_back({a + 1, a + 2, 0, blocked});
    edges.push_back({a + 2, a + 3, 0, blocked});
  }
  out.graph = Graph(4 * m + 3, std::move(edges));
  out.p = m + 1;
  out.budget = budget;
  out.threshold = inst.target;
  out.source = inst;
  return out;
}

KnapsackSolution solve_kbpr2_brute(const KnapsackInstance& inst) {
  const std::size_t m = inst.items.size();
  if (m > kMaxBruteItems)
    throw SizeError("knapsack brute force limited to " + std::to_string(kMaxBruteItems) + " items");
  KnapsackSolution best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::int64_t weight = 0;
    std::int64_t profit = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      weight += inst.items[i].weight;
      profit += inst.items[i].profit;
    }
    if (weight <= inst.capacity && profit > best.profit) {
      best.profit = profit;
      best.weight = weight;
      best_mask = mask;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (best_mask >> i & 1u) best.items.push_back(static_cast<int>(i + 1));
  best.meets_target = best.profit >= inst.target;
  return best;
}

std::optional<std::vector<int>> solve_partition_brute(const PartitionInstance& inst) {
  const std::size_t n = inst.weights.size();
  if (n > kMaxBruteItems)
    throw SizeError("partition brute force limited to " + std::to_string(kMaxBruteItems) + " weights");
  const std::int64_t total = inst.total();
  if (n % 2 != 0 || total % 2 != 0) return std::nullopt;
  const std::size_t half = n / 2;
  if (half == 0) return std::vector<int>{};

  std::vector<int> pick(half);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    std::int64_t sum = 0;
    for (int i : pick) sum += inst.weights[static_cast<std::size_t>(i - 1)];
    if (2 * sum == total) return pick;
    auto i = static_cast<std::ptrdiff_t>(half) - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] ==
                         static_cast<int>(n - half) + static_cast<int>(i) + 1)
      --i;
    if (i < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < half; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace pmint
