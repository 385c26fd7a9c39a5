#include "emergy/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "emergy/fixtures.hpp"
#include "emergy/generators.hpp"

namespace emergy {
namespace {

constexpr std::string_view kTrivial = "node 1 source 5\nnode 2 output\narc 1 2 1\n";

TEST(ParseGraph, Fig1FixtureShape) {
  const EmergyGraph g = fixtures::fig1();
  EXPECT_EQ(g.node_count(), 12u);
  EXPECT_EQ(g.arc_count(), 16u);
  EXPECT_EQ(g.sources(), (std::vector<NodeId>{1, 5}));
  EXPECT_EQ(g.count(NodeKind::Split), 6u);
  EXPECT_EQ(g.count(NodeKind::CoProduct), 2u);
  EXPECT_EQ(g.count(NodeKind::Output), 2u);
  EXPECT_EQ(g.theta(1), Rational(100));
  EXPECT_EQ(g.theta(5), Rational(250));
  EXPECT_EQ(g.weight(2, 3), Rational::parse("3/10"));
  EXPECT_EQ(g.weight(10, 12), Rational::parse("1/2"));
  EXPECT_EQ(std::vector<NodeId>(g.successors(7).begin(), g.successors(7).end()), (std::vector<NodeId>{8, 11}));
  EXPECT_EQ(std::vector<NodeId>(g.predecessors(4).begin(), g.predecessors(4).end()),
            (std::vector<NodeId>{2, 6, 9}));
}

TEST(ParseGraph, BundledDataFileMatchesEmbeddedFixture) {
  std::ifstream in(EMERGY_DATA_DIR "/fig1.emg");
  ASSERT_TRUE(in) << "missing data/fig1.emg";
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_graph(ss.str()), fixtures::fig1());
}

TEST(ParseGraph, MinimalInstance) {
  const EmergyGraph g = parse_graph(kTrivial);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_EQ(g.weight(1, 2), Rational(1));
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const EmergyGraph g = parse_graph("# header\n\nnode 1 source 5   # theta\n  node 2 output\r\narc 1 2 1\n\n");
  EXPECT_EQ(g.node_count(), 2u);
}

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column, std::string_view needle) {
  try {
    parse_graph(text);
    FAIL() << "expected a parse error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(e.detail().find(needle), std::string::npos) << e.what();
  }
}

TEST(ParseGraph, Errors) {
  expect_parse_error("node 1 source 5\nnode 2 output\narc 1 3 1\n", 3, 7, "undeclared node");
  expect_parse_error("node 1 split\nnode 1 output\n", 2, 6, "duplicate node");
  expect_parse_error("node 1 source 5\nnode 2 output\narc 1 2 1\narc 1 2 1\n", 4, 1, "duplicate arc");
  expect_parse_error("node 1 source\n", 1, 8, "without theta");
  expect_parse_error("node 1 split 3\n", 1, 14, "non-source");
  expect_parse_error("node 1 split\narc 1 1 1\n", 2, 5, "self-loop");
  expect_parse_error("node 1 blob\n", 1, 8, "unknown node kind");
  expect_parse_error("edge 1 2\n", 1, 1, "unknown directive");
  expect_parse_error("node -1 split\n", 1, 6, "non-negative");
  expect_parse_error("node 1 source 1/0\n", 1, 15, "rational");
  expect_parse_error("node 1 split\nnode 2 output\narc 1 2\n", 3, 1, "expected 'arc");
}

TEST(SerializeGraph, RoundTripOnGeneratedGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomGraphOptions opt;
    opt.nodes = 5 + static_cast<unsigned>(seed % 8);
    opt.back_arcs = static_cast<unsigned>(seed % 3);
    const EmergyGraph g = random_emergy_graph(opt, seed);
    const std::string text = serialize_graph(g);
    const EmergyGraph back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), text);
  }
}

// --- validation -------------------------------------------------------------

std::vector<ViolationKind> kinds(const std::vector<Violation>& vs) {
  std::vector<ViolationKind> out;
  for (const auto& v : vs) out.push_back(v.kind);
  return out;
}

TEST(ValidateGraph, Fig1IsValid) { EXPECT_TRUE(validate_graph(fixtures::fig1()).empty()); }

TEST(ValidateGraph, SplitSumViolation) {
  const EmergyGraph g = parse_graph(
      "node 1 source 1\nnode 2 split\nnode 3 output\nnode 4 output\n"
      "arc 1 2 1\narc 2 3 1/2\narc 2 4 2/5\n");
  const auto vs = validate_graph(g);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::SplitWeightSum);
  EXPECT_EQ(vs[0].node, 2u);
  EXPECT_NE(vs[0].message.find("split weights sum to 9/10 ≠ 1"), std::string::npos) << vs[0].message;
}

TEST(ValidateGraph, CoProductWeightViolation) {
  const EmergyGraph g = parse_graph(
      "node 1 source 1\nnode 2 coproduct\nnode 3 output\nnode 4 output\n"
      "arc 1 2 1\narc 2 3 1/2\narc 2 4 1\n");
  const auto vs = validate_graph(g);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::CoProductWeight);
  EXPECT_EQ(vs[0].head, NodeId{3});
  EXPECT_NE(vs[0].message.find("co-product arc weight ≠ 1"), std::string::npos);
}

TEST(ValidateGraph, SourceWithTwoSuccessors) {
  const EmergyGraph g = parse_graph(
      "node 1 source 1\nnode 2 output\nnode 3 output\narc 1 2 1/2\narc 1 3 1/2\n");
  EXPECT_EQ(kinds(validate_graph(g)), std::vector<ViolationKind>{ViolationKind::SourceOutDegree});
}

TEST(ValidateGraph, OtherRules) {
  // co-product with a single successor, output with a successor, isolated split,
  // source with a predecessor, weight above one.
  const EmergyGraph g = parse_graph(
      "node 1 source 1\nnode 2 coproduct\nnode 3 output\nnode 4 split\nnode 5 output\nnode 6 source 2\n"
      "arc 1 2 1\narc 2 3 1\narc 3 5 1\narc 5 6 2\narc 6 3 1\n");
  const auto ks = kinds(validate_graph(g));
  for (ViolationKind k : {ViolationKind::CoProductOutDegree, ViolationKind::OutputSuccessor,
                          ViolationKind::IsolatedIntermediate, ViolationKind::SourcePredecessor,
                          ViolationKind::WeightRange}) {
    EXPECT_NE(std::find(ks.begin(), ks.end(), k), ks.end());
  }
}

TEST(ValidateGraph, NonPositiveTheta) {
  const EmergyGraph g = parse_graph("node 1 source 0\nnode 2 output\narc 1 2 1\n");
  EXPECT_EQ(kinds(validate_graph(g)), std::vector<ViolationKind>{ViolationKind::SourceTheta});
}

TEST(ValidateGraph, ZeroWeightIsRejected) {
  const EmergyGraph g = parse_graph(
      "node 1 source 1\nnode 2 split\nnode 3 output\nnode 4 output\narc 1 2 1\narc 2 3 1\narc 2 4 0\n");
  EXPECT_EQ(kinds(validate_graph(g)), std::vector<ViolationKind>{ViolationKind::WeightRange});
}

// Mutation property: perturbing one split arc weight of a valid graph yields
// exactly the split-sum violation at that node.
TEST(ValidateGraph, SingleWeightMutationYieldsOneViolation) {
  int mutated = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const EmergyGraph g = random_emergy_graph(RandomGraphOptions{}, seed);
    ASSERT_TRUE(validate_graph(g).empty()) << "seed " << seed;
    for (const Arc& a : g.arcs()) {
      if (g.kind(a.from) != NodeKind::Split || a.weight == Rational(1)) continue;
      std::string text = serialize_graph(g);
      const std::string line = "arc " + std::to_string(a.from) + " " + std::to_string(a.to) + " " + a.weight.str();
      const std::string halved = "arc " + std::to_string(a.from) + " " + std::to_string(a.to) + " " +
                                 (a.weight * Rational::parse("1/2")).str();
      text.replace(text.find(line), line.size(), halved);
      const auto vs = validate_graph(parse_graph(text));
      ASSERT_EQ(vs.size(), 1u);
      EXPECT_EQ(vs[0].kind, ViolationKind::SplitWeightSum);
      EXPECT_EQ(vs[0].node, a.from);
      ++mutated;
      break;
    }
  }
  EXPECT_GT(mutated, 10);
}

// --- topological order ------------------------------------------------------

void expect_topological(const EmergyGraph& g, const TopologicalResult& r) {
  ASSERT_TRUE(r.acyclic());
  ASSERT_EQ(r.order.size(), g.node_count());
  std::map<NodeId, std::size_t> pos;
  for (std::size_t i = 0; i < r.order.size(); ++i) pos[r.order[i]] = i;
  for (const Arc& a : g.arcs()) EXPECT_LT(pos.at(a.from), pos.at(a.to));
}

void expect_cycle(const EmergyGraph& g, const std::vector<NodeId>& cycle) {
  ASSERT_GE(cycle.size(), 2u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    EXPECT_TRUE(g.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
}

TEST(TopologicalOrder, TrivialGraph) {
  const auto r = topological_order(parse_graph(kTrivial));
  EXPECT_EQ(r.order, (std::vector<NodeId>{1, 2}));
}

TEST(TopologicalOrder, Fig1HasCycleThroughSevenEightSix) {
  const EmergyGraph g = fixtures::fig1();
  const auto r = topological_order(g);
  ASSERT_FALSE(r.acyclic());
  EXPECT_EQ(r.cycle, (std::vector<NodeId>{3, 7, 8, 6}));
  expect_cycle(g, r.cycle);
}

TEST(TopologicalOrder, DiamondChainIsOrdered) {
  for (unsigned L : {1u, 5u, 12u}) {
    const EmergyGraph g = diamond_chain(L);
    expect_topological(g, topological_order(g));
  }
}

TEST(TopologicalOrder, RandomGraphsGiveOrderOrCycle) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    RandomGraphOptions opt;
    opt.nodes = 6 + static_cast<unsigned>(seed % 6);
    opt.back_arcs = static_cast<unsigned>(seed % 2);
    const EmergyGraph g = random_emergy_graph(opt, seed);
    const auto r = topological_order(g);
    if (r.acyclic()) {
      expect_topological(g, r);
    } else {
      expect_cycle(g, r.cycle);
    }
  }
}

TEST(TargetArc, Requirements) {
  const EmergyGraph g = fixtures::fig1();
  EXPECT_NO_THROW(require_target_arc(g, {4, 7}));
  EXPECT_THROW(require_target_arc(g, {7, 4}), std::invalid_argument);
  EXPECT_THROW(require_target_arc(g, {4, 4}), std::invalid_argument);
}

}  // namespace
}  // namespace emergy
