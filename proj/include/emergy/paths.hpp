#ifndef EMERGY_PATHS_HPP
#define EMERGY_PATHS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emergy/graph.hpp"
#include "emergy/rational.hpp"

namespace emergy {

/// A path in the path algebra: the absorbing empty path (zero), the neutral
/// trivial path (one, any sequence of at most one node), or a node sequence.
class Path {
 public:
  static Path zero();
  static Path one() { return Path(); }

  Path() = default;
  explicit Path(std::vector<NodeId> nodes);

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && nodes_.empty(); }
  /// Arc count; nullopt stands for the -infinity length of zero.
  std::optional<std::size_t> length() const;
  const std::vector<NodeId>& nodes() const { return nodes_; }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  bool zero_ = false;
  std::vector<NodeId> nodes_;  // empty or at least two nodes
};

Path concat(const Path& lhs, const Path& rhs);

/// Product of the arc weights along `p`, times theta when `p` starts at a
/// source. Zero maps to 0 and one maps to 1. Throws GraphError on a non-arc step.
Rational phi_path(const EmergyGraph& g, const Path& p);
Rational phi_path(const EmergyGraph& g, std::span<const NodeId> nodes);

/// A path ending with the target arc, annotated with its value.
struct EmergyPath {
  std::vector<NodeId> nodes;
  Rational phi;

  NodeId source() const { return nodes.front(); }
  std::size_t arc_count() const { return nodes.size() - 1; }

  friend bool operator==(const EmergyPath&, const EmergyPath&) = default;
};

/// Paths starting at `start` whose prefix up to the tail of `arc` is simple
/// and which end by traversing `arc`; the head may coincide with one earlier
/// node. Sorted lexicographically.
std::vector<EmergyPath> enumerate_paths_from(const EmergyGraph& g, NodeId start, const TargetArc& arc);

/// All emergy paths ending with `arc`, grouped by ascending source id and
/// lexicographic within each source. Throws std::invalid_argument on a bad arc.
std::vector<EmergyPath> enumerate_emergy_paths(const EmergyGraph& g, const TargetArc& arc);

/// Structural check of a single path against the emergy-path shape for `arc`.
bool is_emergy_path_shape(const EmergyGraph& g, std::span<const NodeId> nodes, const TargetArc& arc);

std::string format_nodes(std::span<const NodeId> nodes);

}  // namespace emergy

#endif  // EMERGY_PATHS_HPP
