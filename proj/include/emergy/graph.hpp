#ifndef EMERGY_GRAPH_HPP
#define EMERGY_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emergy/rational.hpp"

namespace emergy {

using NodeId = std::uint64_t;

enum class NodeKind { Source, Split, CoProduct, Output };

std::string_view to_string(NodeKind kind);

struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  Rational weight;
};

/// The arc (l, l') whose emergy is queried.
struct TargetArc {
  NodeId tail = 0;
  NodeId head = 0;

  friend bool operator==(const TargetArc&, const TargetArc&) = default;
};

/// Thrown by the builders on structural errors (duplicates, undeclared
/// endpoints, self-loops). The parser rethrows these as ParseError.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Emergy graph: typed nodes, exact arc weights, sorted adjacency.
///
/// Successor and predecessor lists are kept sorted ascending by id so that
/// every traversal over the graph is deterministic.
class EmergyGraph {
 public:
  void add_node(NodeId id, NodeKind kind, Rational theta = Rational());
  void add_arc(NodeId from, NodeId to, Rational weight);

  bool has_node(NodeId id) const { return nodes_.contains(id); }
  bool has_arc(NodeId from, NodeId to) const { return arcs_.contains({from, to}); }

  NodeKind kind(NodeId id) const { return node(id).kind; }
  /// Source emergy; zero for non-source nodes.
  const Rational& theta(NodeId id) const { return node(id).theta; }
  /// Throws GraphError when (from, to) is not an arc.
  const Rational& weight(NodeId from, NodeId to) const;

  std::span<const NodeId> successors(NodeId id) const { return node(id).successors; }
  std::span<const NodeId> predecessors(NodeId id) const { return node(id).predecessors; }

  /// All node ids, ascending.
  std::vector<NodeId> node_ids() const;
  /// Source ids, ascending.
  std::vector<NodeId> sources() const;
  /// All arcs ordered by (from, to).
  std::vector<Arc> arcs() const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t count(NodeKind kind) const;

  /// Copy with `id` and its incident arcs removed.
  EmergyGraph without_node(NodeId id) const;
  /// Copy with every source emergy multiplied by `factor`.
  EmergyGraph with_scaled_sources(const Rational& factor) const;

  friend bool operator==(const EmergyGraph&, const EmergyGraph&) = default;

 private:
  struct NodeData {
    NodeKind kind = NodeKind::Split;
    Rational theta;
    std::vector<NodeId> successors;
    std::vector<NodeId> predecessors;

    friend bool operator==(const NodeData&, const NodeData&) = default;
  };

  const NodeData& node(NodeId id) const;

  std::map<NodeId, NodeData> nodes_;
  std::map<std::pair<NodeId, NodeId>, Rational> arcs_;
};

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Parses the line-oriented emergy-graph format:
///
///     node <id> source <rational>
///     node <id> split|coproduct|output
///     arc <from> <to> <rational>
///
/// '#' starts a comment. Only syntax and endpoint declaration are checked;
/// use validate_graph for the structural rules.
EmergyGraph parse_graph(std::string_view text);

/// Canonical text: nodes ascending, then arcs ordered by (from, to).
std::string serialize_graph(const EmergyGraph& g);

enum class ViolationKind {
  SourceOutDegree,
  SourcePredecessor,
  SourceTheta,
  OutputSuccessor,
  SplitWeightSum,
  CoProductWeight,
  CoProductOutDegree,
  WeightRange,
  IsolatedIntermediate,
};

struct Violation {
  ViolationKind kind;
  NodeId node = 0;
  std::optional<NodeId> head;  // set for arc-level violations
  std::string message;
};

/// Lists every violated structural rule; an empty report means the graph is valid.
std::vector<Violation> validate_graph(const EmergyGraph& g);

struct TopologicalResult {
  /// Every node, each arc (i, j) with i before j. Empty when cyclic.
  std::vector<NodeId> order;
  /// Directed cycle v0 -> v1 -> ... -> vk -> v0, rotated to start at its
  /// smallest id. Empty when acyclic.
  std::vector<NodeId> cycle;

  bool acyclic() const { return cycle.empty(); }
};

TopologicalResult topological_order(const EmergyGraph& g);

/// Throws std::invalid_argument unless `arc` is an arc of `g` with distinct ends.
void require_target_arc(const EmergyGraph& g, const TargetArc& arc);

}  // namespace emergy

#endif  // EMERGY_GRAPH_HPP
