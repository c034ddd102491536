#ifndef PMINT_MEDIAN_HPP
#define PMINT_MEDIAN_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pmint/graph.hpp"

namespace pmint {

/// Sorted, duplicate-free set of facility vertices.
class FacilitySet {
public:
  FacilitySet() = default;
  explicit FacilitySet(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int p() const { return static_cast<int>(vertices_.size()); }
  bool contains(VertexId v) const;

  friend auto operator<=>(const FacilitySet&, const FacilitySet&) = default;

private:
  std::vector<VertexId> vertices_;
};

/// Sum of distances to the nearest facility, or Infeasible when some vertex
/// cannot reach any facility. Infeasible orders above every finite value.
class MedianValue {
public:
  constexpr MedianValue() = default;
  constexpr explicit MedianValue(std::int64_t value) : value_(value) {}
  static constexpr MedianValue infeasible() {
    MedianValue m;
    m.infeasible_ = true;
    return m;
  }

  bool is_infeasible() const { return infeasible_; }
  /// Finite value; meaningless when infeasible.
  std::int64_t value() const { return value_; }
  std::string to_string() const;

  friend constexpr std::strong_ordering operator<=>(const MedianValue& a, const MedianValue& b) {
    if (a.infeasible_ || b.infeasible_) return a.infeasible_ <=> b.infeasible_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const MedianValue& a, const MedianValue& b) {
    return (a <=> b) == 0;
  }

private:
  std::int64_t value_ = 0;
  bool infeasible_ = false;
};

struct MedianSolution {
  FacilitySet facilities;
  MedianValue value;
};

/// f(X) on the given graph.
MedianValue objective(const Graph& graph, const FacilitySet& facilities);

/// Exact p-median by enumerating all C(n, p) subsets over precomputed
/// all-pairs distances. Ties go to the lexicographically smallest set.
/// The parallel version splits the enumeration by smallest chosen vertex.
MedianSolution solve_p_median_enum(const Graph& graph, int p);
MedianSolution solve_p_median_enum_serial(const Graph& graph, int p);

/// Exact p-median on an acyclic graph by dynamic programming over
/// connected service regions, O(n^2 p^2) per component. Returns the same
/// lexicographically smallest optimum as enumeration.
MedianSolution solve_p_median_forest(const Graph& forest, int p);
MedianValue p_median_forest_value(const Graph& forest, int p);

/// Dispatches to the forest solver on acyclic graphs, enumeration otherwise.
MedianSolution solve_p_median(const Graph& graph, int p);
MedianValue p_median_value(const Graph& graph, int p);

/// Leaf peeling with unit vertex weights; leaves are processed in ascending id.
VertexId goldman_1_median(const Graph& tree);

struct OneMedianTable {
  VertexMap<std::int64_t> values;  // f({v}) for every v
  std::vector<VertexId> optimal;   // all minimizers, ascending
  std::int64_t optimum = 0;
};

/// f({v}) for every vertex via one rooted pass and one rerooting pass.
OneMedianTable all_vertex_1median_values(const Graph& tree);

struct PathMedian {
  std::vector<VertexId> optimal;  // positions along the path
  std::int64_t value = 0;
};

/// Closed form for the unit-length path on n vertices.
PathMedian unit_path_1median(std::int64_t n);

}  // namespace pmint

#endif  // PMINT_MEDIAN_HPP
