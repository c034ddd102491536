#ifndef PMINT_INSTANCE_IO_HPP
#define PMINT_INSTANCE_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmint/graph.hpp"
#include "pmint/interdiction.hpp"
#include "pmint/reduction.hpp"

namespace pmint {

/// A complete problem input.
struct Instance {
  Graph graph;
  int p = 1;
  Cost budget = 0;
  /// Full-line comments, without the leading "# ".
  std::vector<std::string> comments;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Text format:
///
///   n m
///   p B
///   u v length cost      (m lines)
///
/// Base-10 integers separated by blanks, LF line endings, '#' starts a comment
/// that runs to the end of the line. Throws ParseError naming line and column.
Instance parse_instance(std::string_view text);

/// Canonical text: comments first, then the records above.
std::string serialize_instance(const Instance& instance);

/// One "key values..." line each for algorithm, value, strategy, cost and
/// facilities; ids ascending, INFEASIBLE for infeasible values.
std::string serialize_result(const SolveResult& result);

enum class GeneratorKind {
  PathUnit,
  PathRandomLengths,
  TreeUnitRandom,
  GadgetFromKnapsack,
  GadgetFromPartition,
};

std::string_view generator_kind_name(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::PathUnit;
  VertexId size = 0;
  std::optional<int> p;        // default: budget + 1
  std::optional<Cost> budget;  // default: 1 (0 on a single vertex)
  std::uint64_t seed = 0;
  Length min_length = 1;
  Length max_length = 10;
  std::vector<std::int64_t> weights;           // gadget-from-partition
  std::vector<KnapsackInstance::Item> items;   // gadget-from-knapsack
  std::int64_t capacity = 0;
  std::int64_t target = 0;
};

/// Deterministic in the spec (seed included).
Instance generate(const GeneratorSpec& spec);

/// Gadget as an instance, with the source knapsack recorded in comments.
Instance gadget_instance(const GadgetInstance& gadget);

}  // namespace pmint

#endif  // PMINT_INSTANCE_IO_HPP
