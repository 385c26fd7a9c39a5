#include "emergy/paths.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace emergy {

Path Path::zero() {
  Path p;
  p.zero_ = true;
  return p;
}

Path::Path(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) nodes_.clear();
}

std::optional<std::size_t> Path::length() const {
  if (zero_) return std::nullopt;
  return nodes_.empty() ? 0 : nodes_.size() - 1;
}

Path concat(const Path& lhs, const Path& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Path::zero();
  if (lhs.is_one()) return rhs;
  if (rhs.is_one()) return lhs;
  if (lhs.nodes().back() != rhs.nodes().front()) return Path::zero();
  std::vector<NodeId> joined = lhs.nodes();
  joined.insert(joined.end(), rhs.nodes().begin() + 1, rhs.nodes().end());
  return Path(std::move(joined));
}

Rational phi_path(const EmergyGraph& g, std::span<const NodeId> nodes) {
  if (nodes.size() < 2) return Rational(1);
  Rational value = g.kind(nodes.front()) == NodeKind::Source ? g.theta(nodes.front()) : Rational(1);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) value *= g.weight(nodes[k], nodes[k + 1]);
  return value;
}

Rational phi_path(const EmergyGraph& g, const Path& p) {
  if (p.is_zero()) return Rational(0);
  return phi_path(g, std::span<const NodeId>(p.nodes()));
}

namespace {

// Depth-first search over simple prefixes. `phi` carries the running product
// so each recorded path costs one multiplication.
class PathCollector {
 public:
  PathCollector(const EmergyGraph& g, const TargetArc& arc, std::vector<EmergyPath>& out)
      : g_(g), arc_(arc), out_(out) {}

  void run(NodeId start) {
    const Rational init = g_.kind(start) == NodeKind::Source ? g_.theta(start) : Rational(1);
    prefix_.push_back(start);
    on_path_.insert(start);
    visit(start, init);
    on_path_.erase(start);
    prefix_.pop_back();
  }

 private:
  void visit(NodeId v, const Rational& phi) {
    if (v == arc_.tail) {
      // Leaving the tail through any other arc can never return to it.
      prefix_.push_back(arc_.head);
      out_.push_back(EmergyPath{prefix_, phi * g_.weight(arc_.tail, arc_.head)});
      prefix_.pop_back();
      return;
    }
    for (NodeId w : g_.successors(v)) {
      if (on_path_.contains(w)) continue;
      prefix_.push_back(w);
      on_path_.insert(w);
      visit(w, phi * g_.weight(v, w));
      on_path_.erase(w);
      prefix_.pop_back();
    }
  }

  const EmergyGraph& g_;
  const TargetArc& arc_;
  std::vector<EmergyPath>& out_;
  std::vector<NodeId> prefix_;
  std::unordered_set<NodeId> on_path_;
};

}  // namespace

std::vector<EmergyPath> enumerate_paths_from(const EmergyGraph& g, NodeId start, const TargetArc& arc) {
  require_target_arc(g, arc);
  std::vector<EmergyPath> out;
  PathCollector(g, arc, out).run(start);
  // Successors are visited in ascending order, so DFS output is already sorted.
  return out;
}

std::vector<EmergyPath> enumerate_emergy_paths(const EmergyGraph& g, const TargetArc& arc) {
  require_target_arc(g, arc);
  std::vector<EmergyPath> out;
  for (NodeId s : g.sources()) {
    auto part = enumerate_paths_from(g, s, arc);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool is_emergy_path_shape(const EmergyGraph& g, std::span<const NodeId> nodes, const TargetArc& arc) {
  if (nodes.size() < 2) return false;
  if (g.kind(nodes.front()) != NodeKind::Source) return false;
  if (nodes[nodes.size() - 2] != arc.tail || nodes.back() != arc.head) return false;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (!g.has_arc(nodes[k], nodes[k + 1])) return false;
  }
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (g.kind(nodes[k]) == NodeKind::Source) return false;
  }
  std::set<NodeId> prefix(nodes.begin(), nodes.end() - 1);
  return prefix.size() == nodes.size() - 1;
}

std::string format_nodes(std::span<const NodeId> nodes) {
  std::string out = "(";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(nodes[k]);
  }
  return out + ")";
}

}  // namespace emergy
