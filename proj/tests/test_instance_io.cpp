#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmint/error.hpp"
#include "pmint/fixtures.hpp"
#include "pmint/instance_io.hpp"

using namespace pmint;

namespace {

const char* kUnitPath7 =
    "7 6\n2 1\n1 2 1 1\n2 3 1 1\n3 4 1 1\n4 5 1 1\n5 6 1 1\n6 7 1 1\n";

std::string fixture_text(std::string_view name) {
  for (const auto& f : fixture_corpus())
    if (f.name == name) return std::string(f.instance);
  ADD_FAILURE() << "missing fixture " << name;
  return {};
}

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    parse_instance(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Parse, UnitPath) {
  const Instance inst = parse_instance(kUnitPath7);
  EXPECT_EQ(inst.graph, oracles::unit_path(7));
  EXPECT_EQ(inst.p, 2);
  EXPECT_EQ(inst.budget, 1);
  EXPECT_TRUE(inst.comments.empty());
}

TEST(Parse, WeightedFixture) {
  const Instance inst = parse_instance(fixture_text("weighted_leaf_gap"));
  EXPECT_EQ(inst.graph, oracles::weighted_tree());
  std::vector<Length> lengths;
  for (const Edge& e : inst.graph.edges()) lengths.push_back(e.length);
  EXPECT_EQ(lengths, (std::vector<Length>{10, 10, 1, 1, 10, 10}));
}

TEST(Parse, CommentsAndBlankLines) {
  const Instance inst = parse_instance("# hello\n\n3 2   # trailing\n  2 0\n1 2 0 1\n\n2 3 4 2 # x\n");
  EXPECT_EQ(inst.comments, (std::vector<std::string>{"hello"}));
  EXPECT_EQ(inst.graph.edge(2).length, 4);
  EXPECT_EQ(inst.graph.edge(2).cost, 2);
}

TEST(Parse, Errors) {
  expect_parse_error("2 1\n1 0\n1 1 1 1\n", 3, 3);   // self-loop
  expect_parse_error("3 2\n1 0\n1 2 1 1\n2 1 1 1\n", 4, 1);  // parallel edge
  expect_parse_error("2 1\n1 0\n1 3 1 1\n", 3, 3);   // id out of range
  expect_parse_error("2 1\n1 0\n1 2 1 0\n", 3, 7);   // cost 0
  expect_parse_error("2 1\n1 0\n1 2 -1 1\n", 3, 5);  // negative length
  expect_parse_error("2 1\n1 0\n1 2 x 1\n", 3, 5);
  expect_parse_error("2 1\n1 0\n1 2 1\n", 3, 1);
  expect_parse_error("2 1\n1 0\n1 2 1 1 9\n", 3, 9);
  expect_parse_error("2 1\n3 0\n1 2 1 1\n", 2, 1);   // p > n
  expect_parse_error("2 1\n1 -1\n1 2 1 1\n", 2, 3);
  expect_parse_error("2 1\r\n1 0\n1 2 1 1\n", 1, 4);
  expect_parse_error("2 2\n1 0\n1 2 1 1\n", 3, 1);   // missing edge line
  expect_parse_error("2 0\n1 0\n1 2 1 1\n", 3, 1);   // extra data
  expect_parse_error("", 1, 1);
  expect_parse_error("2 1 1 0\n1 2 1 1\n", 1, 5);    // header must be two lines
  expect_parse_error("2 1\n1 0\n1 2 99999999999999999999 1\n", 3, 5);
}

TEST(Serialize, RoundTrip) {
  for (const auto& f : fixture_corpus()) {
    const Instance inst = parse_instance(f.instance);
    const std::string text = serialize_instance(inst);
    EXPECT_EQ(parse_instance(text), inst) << f.name;
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    EXPECT_EQ(text, f.instance) << f.name << " is not in canonical form";
  }
  const std::string messy = "3 2 # c\n 1   1\n1 2 1 1\n2 3 1 1\n";
  const std::string canonical = serialize_instance(parse_instance(messy));
  EXPECT_EQ(canonical, "3 2\n1 1\n1 2 1 1\n2 3 1 1\n");
}

TEST(Serialize, RandomRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(oracles::uniform(rng, 1, 12));
    Instance inst;
    inst.graph = oracles::random_graph(n, 3, rng, 10, 4);
    inst.p = static_cast<int>(oracles::uniform(rng, 1, n));
    inst.budget = oracles::uniform(rng, 0, 9);
    if (trial % 3 == 0) inst.comments = {"seed " + std::to_string(trial), ""};
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(Serialize, Result) {
  const Graph g = oracles::greedy_gap_tree();
  const SolveResult r = oracle(g, 4, 3);
  EXPECT_EQ(serialize_result(r),
            "algorithm oracle\nvalue 16\nstrategy 3 7 8\ncost 3\nfacilities 3 5 8 9\n");
  SolveResult infeasible;
  infeasible.value = MedianValue::infeasible();
  infeasible.note = "x";
  EXPECT_EQ(serialize_result(infeasible),
            "algorithm oracle\nvalue INFEASIBLE\nstrategy\ncost 0\nfacilities\nnote x\n");
}

TEST(Generate, UnitPathMatchesFixture) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PathUnit;
  spec.size = 7;
  EXPECT_EQ(serialize_instance(generate(spec)), kUnitPath7);
  EXPECT_EQ(serialize_instance(generate(spec)), fixture_text("unit_path7"));
}

TEST(Generate, DeterministicInSeed) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::TreeUnitRandom;
  spec.size = 5;
  spec.seed = 1;
  const auto a = serialize_instance(generate(spec));
  EXPECT_EQ(a, serialize_instance(generate(spec)));
  spec.seed = 2;
  spec.size = 30;
  const auto b = serialize_instance(generate(spec));
  spec.seed = 3;
  EXPECT_NE(b, serialize_instance(generate(spec)));
}

TEST(Generate, RandomTreesAreTrees) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::TreeUnitRandom;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    spec.seed = seed;
    spec.size = static_cast<VertexId>(1 + seed % 20);
    const Instance inst = generate(spec);
    EXPECT_TRUE(is_tree(classify(inst.graph)));
    EXPECT_TRUE(inst.graph.has_unit_lengths());
    EXPECT_EQ(inst.p, inst.budget + 1);
  }
}

TEST(Generate, RandomLengthsStayInRange) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PathRandomLengths;
  spec.size = 50;
  spec.seed = 4;
  const Instance ranged = generate(spec);
  for (const Edge& e : ranged.graph.edges()) {
    EXPECT_GE(e.length, 1);
    EXPECT_LE(e.length, 10);
  }
  spec.min_length = 0;
  spec.max_length = 0;
  const Instance flat = generate(spec);
  for (const Edge& e : flat.graph.edges()) EXPECT_EQ(e.length, 0);
  spec.min_length = 5;
  spec.max_length = 4;
  EXPECT_THROW(generate(spec), InputError);
  spec.kind = GeneratorKind::PathUnit;
  spec.size = 0;
  EXPECT_THROW(generate(spec), InputError);
  spec.size = 3;
  spec.budget = 3;
  EXPECT_THROW(generate(spec), InputError);
}

TEST(Generate, PartitionGadget) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::GadgetFromPartition;
  spec.weights = {1, 1, 1, 1};
  const Instance inst = generate(spec);
  const auto gadget = kbpr2_to_gadget(partition_to_kbpr2({spec.weights}));
  EXPECT_EQ(inst.graph, gadget.graph);
  EXPECT_EQ(inst.graph.vertex_count(), 19);
  EXPECT_EQ(inst.p, gadget.p);
  EXPECT_EQ(inst.budget, gadget.budget);
  EXPECT_EQ(inst.comments.front(), "partition weights 1 1 1 1");
  EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
}

TEST(Generate, KnapsackGadgetMatchesFixture) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::GadgetFromKnapsack;
  spec.items = {{1, 1}, {1, 2}};
  spec.capacity = 1;
  spec.target = 2;
  EXPECT_EQ(serialize_instance(generate(spec)), fixture_text("two_item_gadget"));
}

TEST(GeneratorKinds, RoundTrip) {
  for (auto k : {GeneratorKind::PathUnit, GeneratorKind::PathRandomLengths, GeneratorKind::TreeUnitRandom,
                 GeneratorKind::GadgetFromKnapsack, GeneratorKind::GadgetFromPartition})
    EXPECT_EQ(parse_generator_kind(generator_kind_name(k)), k);
  EXPECT_FALSE(parse_generator_kind("cycle").has_value());
}
