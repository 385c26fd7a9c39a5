#include "emergy/compatibility.hpp"

#include <gtest/gtest.h>

#include <random>

#include "emergy/fixtures.hpp"
#include "emergy/generators.hpp"
#include "oracles.hpp"

namespace emergy {
namespace {

using testing::NodeSeq;
using Edge = std::pair<std::size_t, std::size_t>;

TEST(LongestCommonPrefix, Basics) {
  EXPECT_EQ(longest_common_prefix(NodeSeq{1, 2, 3, 7}, NodeSeq{1, 2, 4, 7}), (NodeSeq{1, 2}));
  EXPECT_EQ(longest_common_prefix(NodeSeq{1, 2}, NodeSeq{5, 2}), NodeSeq{});
  EXPECT_EQ(longest_common_prefix(NodeSeq{4, 7}, NodeSeq{4, 7}), (NodeSeq{4, 7}));
}

TEST(Compatible, Fig1Fixtures) {
  const EmergyGraph g = fixtures::fig1();
  EXPECT_TRUE(compatible(g, NodeSeq{3, 7, 8, 6, 4}, NodeSeq{3, 7, 8, 9, 10, 6, 4}));
  EXPECT_FALSE(compatible(g, NodeSeq{8, 9, 4, 7}, NodeSeq{8, 9, 10, 6, 4, 7}));
  // different first node
  EXPECT_TRUE(compatible(g, NodeSeq{1, 2, 4, 7}, NodeSeq{5, 6, 4, 7}));
  EXPECT_TRUE(compatible(g, NodeSeq{1, 2, 4, 7}, NodeSeq{1, 2, 4, 7}));
  // divergence at split 2
  EXPECT_TRUE(compatible(g, NodeSeq{1, 2, 4, 7}, NodeSeq{1, 2, 3, 7, 8, 9, 4, 7}));
}

TEST(Compatible, RejectsMismatchedInput) {
  const EmergyGraph g = fixtures::fig1();
  EXPECT_THROW(compatible(g, NodeSeq{1, 2, 4, 7}, NodeSeq{1, 2, 3, 7}), std::invalid_argument);
}

TEST(CompatibilityGraph, Fig1) {
  const EmergyGraph g = fixtures::fig1();
  const auto cg = build_compatibility_graph(g, {4, 7});
  ASSERT_EQ(cg.vertex_count(), 6u);
  EXPECT_EQ(cg.edge_count(), 14u);
  // the only missing edge: the two paths through co-product 9 from source 1
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      EXPECT_EQ(cg.adjacent(i, j), !(i == 1 && j == 2)) << i << "," << j;
    }
  }
  EXPECT_TRUE(find_induced_p4(cg).p4_free);
}

TEST(FindInducedP4, HandMadeGraphs) {
  const std::vector<Edge> path4{{0, 1}, {1, 2}, {2, 3}};
  const auto p4 = find_induced_p4(CompatibilityGraph::from_edges(4, path4));
  ASSERT_FALSE(p4.p4_free);
  const auto w = *p4.witness;
  const auto cg = CompatibilityGraph::from_edges(4, path4);
  EXPECT_TRUE(cg.adjacent(w[0], w[1]) && cg.adjacent(w[1], w[2]) && cg.adjacent(w[2], w[3]));
  EXPECT_FALSE(cg.adjacent(w[0], w[2]) || cg.adjacent(w[0], w[3]) || cg.adjacent(w[1], w[3]));

  const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_TRUE(find_induced_p4(CompatibilityGraph::from_edges(4, c4)).p4_free);
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  EXPECT_FALSE(find_induced_p4(CompatibilityGraph::from_edges(5, c5)).p4_free);
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_TRUE(find_induced_p4(CompatibilityGraph::from_edges(4, star)).p4_free);
  EXPECT_TRUE(find_induced_p4(CompatibilityGraph::from_edges(3, {})).p4_free);
}

TEST(FindInducedP4, VertexCap) {
  const auto cg = CompatibilityGraph::from_edges(10, {});
  EXPECT_THROW(find_induced_p4(cg, 9), std::length_error);
}

// Cross-check of the scan on random small graphs against the plain
// four-subset definition.
TEST(FindInducedP4, AgreesWithSubsetScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (std::bernoulli_distribution(0.5)(rng)) edges.emplace_back(a, b);
      }
    }
    const auto cg = CompatibilityGraph::from_edges(n, edges);
    bool any = false;
    std::array<std::size_t, 4> q{};
    for (q[0] = 0; q[0] < n && !any; ++q[0]) {
      for (q[1] = 0; q[1] < n && !any; ++q[1]) {
        for (q[2] = 0; q[2] < n && !any; ++q[2]) {
          for (q[3] = 0; q[3] < n && !any; ++q[3]) {
            const std::set<std::size_t> distinct(q.begin(), q.end());
            if (distinct.size() != 4) continue;
            any = cg.adjacent(q[0], q[1]) && cg.adjacent(q[1], q[2]) && cg.adjacent(q[2], q[3]) &&
                  !cg.adjacent(q[0], q[2]) && !cg.adjacent(q[0], q[3]) && !cg.adjacent(q[1], q[3]);
          }
        }
      }
    }
    EXPECT_EQ(find_induced_p4(cg).p4_free, !any) << "trial " << trial;
  }
}

TEST(CompatibilityGraph, MatchesOracleRuleAndIsSymmetric) {
  const auto instances =
      testing::draw_instances(60, RandomGraphOptions{.nodes = 10, .arc_density = 0.6, .back_arcs = 2},
                              testing::InstanceFilter{.min_paths = 5, .max_paths = 60}, 500);
  for (const auto& inst : instances) {
    const auto cg = build_compatibility_graph(inst.graph, inst.arc);
    const auto& v = cg.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(cg.adjacent(i, j), cg.adjacent(j, i));
        EXPECT_EQ(cg.adjacent(i, j), testing::oracle_compatible(inst.graph, v[i].nodes, v[j].nodes));
      }
      EXPECT_TRUE(compatible(inst.graph, v[i].nodes, v[i].nodes));
    }
    EXPECT_TRUE(find_induced_p4(cg).p4_free) << "seed " << inst.seed;
  }
}

TEST(CompatibilityGraph, CoProductOnlySingleSourceIsEdgeless) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 20 && seed < 500; ++seed) {
    const EmergyGraph g = random_emergy_graph(RandomGraphOptions{.nodes = 8, .allow_splits = false}, seed);
    if (g.sources().size() != 1) continue;
    for (const Arc& a : g.arcs()) {
      if (g.kind(a.from) == NodeKind::Source) continue;
      const auto cg = build_compatibility_graph(g, {a.from, a.to});
      EXPECT_EQ(cg.edge_count(), 0u);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 20u);
}

}  // namespace
}  // namespace emergy
