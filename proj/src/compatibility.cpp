#include "emergy/compatibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace emergy {

std::vector<NodeId> longest_common_prefix(std::span<const NodeId> a, std::span<const NodeId> b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return {a.begin(), ia};
}

bool compatible(const EmergyGraph& g, std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.size() < 2 || b.size() < 2 || a[a.size() - 2] != b[b.size() - 2] || a.back() != b.back()) {
    throw std::invalid_argument("compatibility is only defined for paths ending with the same arc");
  }
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) return true;
  if (a.front() != b.front()) return true;

  const std::size_t shared = longest_common_prefix(a, b).size();
  if (shared == a.size() || shared == b.size()) {
    throw std::invalid_argument("prefix-related paths " + format_nodes(a) + " and " + format_nodes(b));
  }
  const NodeId divergence = a[shared - 1];
  switch (g.kind(divergence)) {
    case NodeKind::Split: return true;
    case NodeKind::CoProduct: return false;
    default:
      throw std::invalid_argument("paths diverge at " + std::string(to_string(g.kind(divergence))) + " node " +
                                  std::to_string(divergence));
  }
}

CompatibilityGraph::CompatibilityGraph(std::vector<EmergyPath> vertices)
    : vertices_(std::move(vertices)),
      adjacency_(vertices_.size(), std::vector<char>(vertices_.size(), 0)) {}

CompatibilityGraph CompatibilityGraph::from_edges(std::size_t vertex_count,
                                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
  CompatibilityGraph cg{std::vector<EmergyPath>(vertex_count)};
  for (const auto& [a, b] : edges) cg.add_edge(a, b);
  return cg;
}

void CompatibilityGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b || a >= vertices_.size() || b >= vertices_.size()) {
    throw std::out_of_range("bad compatibility edge");
  }
  if (adjacency_[a][b]) return;
  adjacency_[a][b] = adjacency_[b][a] = 1;
  ++edge_count_;
}

CompatibilityGraph build_compatibility_graph(const EmergyGraph& g, const TargetArc& arc) {
  CompatibilityGraph cg(enumerate_emergy_paths(g, arc));
  const auto& v = cg.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (compatible(g, v[i].nodes, v[j].nodes)) cg.add_edge(i, j);
    }
  }
  return cg;
}

P4Check find_induced_p4(const CompatibilityGraph& cg, std::size_t vertex_cap) {
  const std::size_t n = cg.vertex_count();
  if (n > vertex_cap) {
    throw std::length_error("P4 check limited to " + std::to_string(vertex_cap) + " vertices, got " +
                            std::to_string(n));
  }
  // Every induced P4 a-b-c-d has a middle edge {b, c}; scanning all middle
  // edges in both orientations covers every 4-subset that induces a path.
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      if (b == c || !cg.adjacent(b, c)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == b || a == c || !cg.adjacent(a, b) || cg.adjacent(a, c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (cg.adjacent(c, d) && !cg.adjacent(b, d) && !cg.adjacent(a, d)) {
            return P4Check{false, std::array<std::size_t, 4>{a, b, c, d}};
          }
        }
      }
    }
  }
  return P4Check{};
}

}  // namespace emergy
