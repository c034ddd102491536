#ifndef PMINT_FIXTURES_HPP
#define PMINT_FIXTURES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmint {

/// An instance file shipped under fixtures/ together with its sidecar of
/// expected results. Compiled in from the files at build time.
struct Fixture {
  std::string_view name;
  std::string_view instance;
  std::string_view expected;
};

std::span<const Fixture> fixture_corpus();

struct ClaimOutcome {
  std::string fixture;
  std::string claim;  // sidecar line, e.g. "oracle 16"
  bool pass = false;
  std::string observed;
};

/// Evaluates every sidecar line of every fixture, plus the 7-vertex
/// interdiction matrix. Sidecar lines:
///
///   oracle V | auto V | path-unit V | path-matrix V | tree-leaf V | heuristic V
///   strategy e1,e2 V        locator optimum after cutting the listed edges
///   one-median VERTEX V     leaf-peeling median and its objective
std::vector<ClaimOutcome> verify_fixtures();

}  // namespace pmint

#endif  // PMINT_FIXTURES_HPP
