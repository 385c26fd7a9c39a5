#ifndef EMERGY_COMPATIBILITY_HPP
#define EMERGY_COMPATIBILITY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "emergy/graph.hpp"
#include "emergy/paths.hpp"

namespace emergy {

/// Longest common initial node segment; empty when the first nodes differ.
std::vector<NodeId> longest_common_prefix(std::span<const NodeId> a, std::span<const NodeId> b);

/// Compatibility of two paths ending with the same arc: equal paths, paths
/// with different first nodes, and paths whose common prefix ends at a split
/// are compatible; paths diverging at a co-product are not.
///
/// Throws std::invalid_argument when the paths do not share their final arc
/// or diverge at a source or an output (impossible in a valid graph).
bool compatible(const EmergyGraph& g, std::span<const NodeId> a, std::span<const NodeId> b);

/// Explicit compatibility graph over a set of weighted paths.
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  explicit CompatibilityGraph(std::vector<EmergyPath> vertices);

  /// Bare graph with placeholder vertices, for checking hand-made graphs.
  static CompatibilityGraph from_edges(std::size_t vertex_count,
                                       std::span<const std::pair<std::size_t, std::size_t>> edges);

  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a][b] != 0; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<EmergyPath>& vertices() const { return vertices_; }

 private:
  std::vector<EmergyPath> vertices_;
  std::vector<std::vector<char>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// One vertex per emergy path ending with `arc`, one edge per compatible pair.
CompatibilityGraph build_compatibility_graph(const EmergyGraph& g, const TargetArc& arc);

struct P4Check {
  bool p4_free = true;
  /// Induced path a-b-c-d, in path order, when p4_free is false.
  std::optional<std::array<std::size_t, 4>> witness;
};

inline constexpr std::size_t kDefaultP4VertexCap = 400;

/// Exhaustive search for an induced four-vertex path. Test oracle, not a
/// solver component. Throws std::length_error above `vertex_cap` vertices.
P4Check find_induced_p4(const CompatibilityGraph& cg, std::size_t vertex_cap = kDefaultP4VertexCap);

}  // namespace emergy

#endif  // EMERGY_COMPATIBILITY_HPP
