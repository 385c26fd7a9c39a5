#ifndef EMERGY_TESTS_ORACLES_HPP
#define EMERGY_TESTS_ORACLES_HPP

// Test-only reference implementations. Nothing here calls the enumeration or
// solver code under test.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "emergy/generators.hpp"
#include "emergy/graph.hpp"
#include "emergy/rational.hpp"

namespace emergy::testing {

using NodeSeq = std::vector<NodeId>;

/// Every walk from `start` with at most node_count() arcs whose final arc is
/// `arc`, filtered to those whose nodes before the final one are distinct.
/// Walks are generated blindly (no visited set), then filtered.
std::vector<NodeSeq> oracle_rooted_paths(const EmergyGraph& g, NodeId start, const TargetArc& arc);

/// Union of oracle_rooted_paths over the sources, additionally requiring that
/// no node after the first is a source. Sorted.
std::vector<NodeSeq> oracle_emergy_paths(const EmergyGraph& g, const TargetArc& arc);

/// Product of theta (for a source start) and arc weights, read straight off
/// the arc list.
Rational oracle_phi(const EmergyGraph& g, const NodeSeq& nodes);

/// Pairwise rule from the first-principles definition: equal, different
/// first node, or the last shared node of the common prefix is a split.
bool oracle_compatible(const EmergyGraph& g, const NodeSeq& a, const NodeSeq& b);

/// Best total over all pairwise compatible subsets, by plain subset enumeration.
Rational oracle_best_state(const EmergyGraph& g, const std::vector<NodeSeq>& paths);

/// Sources from which the tail of `arc` is reachable (BFS on successors).
std::set<NodeId> sources_reaching(const EmergyGraph& g, const TargetArc& arc);

struct Instance {
  EmergyGraph graph;
  TargetArc arc;
  std::size_t path_count = 0;
  std::uint64_t seed = 0;
};

struct InstanceFilter {
  std::size_t min_paths = 1;
  std::size_t max_paths = 20;
  std::optional<bool> acyclic;  // require acyclic / cyclic when set
};

/// Deterministically draws `count` instances: graph seeds from `first_seed`
/// upward, the query arc chosen by the seed among the arcs leaving a
/// non-source whose path count passes the filter.
std::vector<Instance> draw_instances(std::size_t count, const RandomGraphOptions& options,
                                     const InstanceFilter& filter, std::uint64_t first_seed);

}  // namespace emergy::testing

#endif  // EMERGY_TESTS_ORACLES_HPP
