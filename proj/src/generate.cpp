#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include "pmint/error.hpp"
#include "pmint/instance_io.hpp"

namespace pmint {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 5> kKindNames{{
    {GeneratorKind::PathUnit, "path-unit"},
    {GeneratorKind::PathRandomLengths, "path-random-lengths"},
    {GeneratorKind::TreeUnitRandom, "tree-unit-random"},
    {GeneratorKind::GadgetFromKnapsack, "gadget-from-knapsack"},
    {GeneratorKind::GadgetFromPartition, "gadget-from-partition"},
}};

/// Uniform integer in [lo, hi]. Rejection sampling over the raw engine output
/// so the stream is identical on every standard library.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

/// Decodes a random Pruefer sequence; edges come out as (min, max), sorted.
std::vector<Edge> random_tree_edges(VertexId n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  std::vector<VertexId> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<VertexId>(draw(rng, 1, n));

  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (VertexId c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  for (VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c), 1, 1});
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b), 1, 1});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  return edges;
}

Instance sized_instance(const GeneratorSpec& spec, std::vector<Edge> edges) {
  Instance inst;
  inst.graph = Graph(spec.size, std::move(edges));
  inst.budget = spec.budget.value_or(spec.size > 1 ? 1 : 0);
  inst.p = spec.p.value_or(static_cast<int>(inst.budget) + 1);
  if (inst.budget < 0) throw InputError("budget must be nonnegative");
  if (inst.p < 1 || inst.p > spec.size) throw InputError("p must lie in 1..n");
  return inst;
}

}  // namespace

std::string_view generator_kind_name(GeneratorKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

Instance gadget_instance(const GadgetInstance& gadget) {
  Instance inst;
  inst.graph = gadget.graph;
  inst.p = gadget.p;
  inst.budget = gadget.budget;
  std::ostringstream items;
  items << "knapsack items (weight:profit)";
  for (const auto& item : gadget.source.items) items << ' ' << item.weight << ':' << item.profit;
  inst.comments.push_back(items.str());
  inst.comments.push_back("capacity " + std::to_string(gadget.source.capacity) + " target " +
                          std::to_string(gadget.source.target));
  std::ostringstream edges;
  edges << "item edges";
  for (EdgeId e : gadget.item_edge) edges << ' ' << e;
  inst.comments.push_back(edges.str());
  inst.comments.push_back("yes-instance iff the interdiction optimum is at least " +
                          std::to_string(gadget.threshold));
  return inst;
}

Instance generate(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::PathUnit:
    case GeneratorKind::PathRandomLengths: {
      if (spec.size < 1) throw InputError("path size must be at least 1");
      const bool random = spec.kind == GeneratorKind::PathRandomLengths;
      if (random && (spec.min_length < 0 || spec.min_length > spec.max_length))
        throw InputError("length range must satisfy 0 <= min <= max");
      std::vector<Edge> edges;
      for (VertexId v = 1; v < spec.size; ++v)
        edges.push_back({v, v + 1, random ? draw(rng, spec.min_length, spec.max_length) : 1, 1});
      return sized_instance(spec, std::move(edges));
    }
    case GeneratorKind::TreeUnitRandom:
      if (spec.size < 1) throw InputError("tree size must be at least 1");
      return sized_instance(spec, random_tree_edges(spec.size, rng));
    case GeneratorKind::GadgetFromKnapsack: {
      KnapsackInstance knapsack{spec.items, spec.capacity, spec.target};
      return gadget_instance(kbpr2_to_gadget(knapsack));
    }
    case GeneratorKind::GadgetFromPartition: {
      Instance inst = gadget_instance(kbpr2_to_gadget(partition_to_kbpr2({spec.weights})));
      std::ostringstream source;
      source << "partition weights";
      for (auto w : spec.weights) source << ' ' << w;
      inst.comments.insert(inst.comments.begin(), source.str());
      return inst;
    }
  }
  throw InputError("unknown generator kind");
}

}  // namespace pmint
