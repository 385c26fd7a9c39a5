#include "emergy/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "text_format.hpp"

namespace emergy {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Source: return "source";
    case NodeKind::Split: return "split";
    case NodeKind::CoProduct: return "coproduct";
    case NodeKind::Output: return "output";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// EmergyGraph

namespace {

void insert_sorted(std::vector<NodeId>& v, NodeId id) {
  v.insert(std::lower_bound(v.begin(), v.end(), id), id);
}

}  // namespace

const EmergyGraph::NodeData& EmergyGraph::node(NodeId id) const {
  const auto it = nodes_.find(id);
  if (it == nodes_.end()) throw GraphError("unknown node " + std::to_string(id));
  return it->second;
}

void EmergyGraph::add_node(NodeId id, NodeKind kind, Rational theta) {
  if (nodes_.contains(id)) throw GraphError("duplicate node " + std::to_string(id));
  NodeData data;
  data.kind = kind;
  if (kind == NodeKind::Source) data.theta = std::move(theta);
  nodes_.emplace(id, std::move(data));
}

void EmergyGraph::add_arc(NodeId from, NodeId to, Rational weight) {
  if (!nodes_.contains(from)) throw GraphError("undeclared node " + std::to_string(from));
  if (!nodes_.contains(to)) throw GraphError("undeclared node " + std::to_string(to));
  if (from == to) throw GraphError("self-loop arc on node " + std::to_string(from));
  if (!arcs_.emplace(std::pair{from, to}, std::move(weight)).second) {
    throw GraphError("duplicate arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  insert_sorted(nodes_[from].successors, to);
  insert_sorted(nodes_[to].predecessors, from);
}

const Rational& EmergyGraph::weight(NodeId from, NodeId to) const {
  const auto it = arcs_.find({from, to});
  if (it == arcs_.end()) {
    throw GraphError("no arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  return it->second;
}

std::vector<NodeId> EmergyGraph::node_ids() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  for (const auto& [id, _] : nodes_) out.push_back(id);
  return out;
}

std::vector<NodeId> EmergyGraph::sources() const {
  std::vector<NodeId> out;
  for (const auto& [id, data] : nodes_) {
    if (data.kind == NodeKind::Source) out.push_back(id);
  }
  return out;
}

std::vector<Arc> EmergyGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const auto& [key, w] : arcs_) out.push_back(Arc{key.first, key.second, w});
  return out;
}

std::size_t EmergyGraph::count(NodeKind kind) const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(),
                                                [kind](const auto& kv) { return kv.second.kind == kind; }));
}

EmergyGraph EmergyGraph::without_node(NodeId id) const {
  EmergyGraph out;
  for (const auto& [nid, data] : nodes_) {
    if (nid != id) out.add_node(nid, data.kind, data.theta);
  }
  for (const auto& [key, w] : arcs_) {
    if (key.first != id && key.second != id) out.add_arc(key.first, key.second, w);
  }
  return out;
}

EmergyGraph EmergyGraph::with_scaled_sources(const Rational& factor) const {
  EmergyGraph out = *this;
  for (auto& [_, data] : out.nodes_) {
    if (data.kind == NodeKind::Source) data.theta *= factor;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

using detail::Token;
using detail::parse_node_id;

Rational parse_rational_token(const Token& tok, std::size_t line) {
  try {
    return Rational::parse(tok.text);
  } catch (const std::exception&) {
    throw ParseError(line, tok.column, "expected a rational, got '" + std::string(tok.text) + "'");
  }
}

std::optional<NodeKind> parse_kind(std::string_view word) {
  if (word == "source") return NodeKind::Source;
  if (word == "split") return NodeKind::Split;
  if (word == "coproduct") return NodeKind::CoProduct;
  if (word == "output") return NodeKind::Output;
  return std::nullopt;
}

}  // namespace

EmergyGraph parse_graph(std::string_view text) {
  EmergyGraph g;
  detail::for_each_line(text, [&g](std::size_t line_no, const std::vector<Token>& toks) {
    const Token& head = toks.front();
    if (head.text == "node") {
      if (toks.size() < 3) {
        throw ParseError(line_no, head.column, "expected 'node <id> <kind> [theta]'");
      }
      const NodeId id = parse_node_id(toks[1], line_no);
      const auto kind = parse_kind(toks[2].text);
      if (!kind) {
        throw ParseError(line_no, toks[2].column, "unknown node kind '" + std::string(toks[2].text) + "'");
      }
      Rational theta;
      if (*kind == NodeKind::Source) {
        if (toks.size() < 4) throw ParseError(line_no, toks[2].column, "source node without theta");
        if (toks.size() > 4) throw ParseError(line_no, toks[4].column, "unexpected token");
        theta = parse_rational_token(toks[3], line_no);
      } else if (toks.size() > 3) {
        throw ParseError(line_no, toks[3].column, "theta given on a non-source node");
      }
      if (g.has_node(id)) throw ParseError(line_no, toks[1].column, "duplicate node " + std::to_string(id));
      g.add_node(id, *kind, std::move(theta));
    } else if (head.text == "arc") {
      if (toks.size() != 4) {
        const std::size_t col = toks.size() > 4 ? toks[4].column : head.column;
        throw ParseError(line_no, col, "expected 'arc <from> <to> <weight>'");
      }
      const NodeId from = parse_node_id(toks[1], line_no);
      const NodeId to = parse_node_id(toks[2], line_no);
      Rational w = parse_rational_token(toks[3], line_no);
      if (!g.has_node(from)) throw ParseError(line_no, toks[1].column, "undeclared node " + std::to_string(from));
      if (!g.has_node(to)) throw ParseError(line_no, toks[2].column, "undeclared node " + std::to_string(to));
      if (from == to) throw ParseError(line_no, toks[1].column, "self-loop arc on node " + std::to_string(from));
      if (g.has_arc(from, to)) {
        throw ParseError(line_no, head.column,
                         "duplicate arc (" + std::to_string(from) + "," + std::to_string(to) + ")");
      }
      g.add_arc(from, to, std::move(w));
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  });
  return g;
}

std::string serialize_graph(const EmergyGraph& g) {
  std::ostringstream os;
  for (NodeId id : g.node_ids()) {
    os << "node " << id << ' ' << to_string(g.kind(id));
    if (g.kind(id) == NodeKind::Source) os << ' ' << g.theta(id);
    os << '\n';
  }
  for (const Arc& a : g.arcs()) os << "arc " << a.from << ' ' << a.to << ' ' << a.weight << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate_graph(const EmergyGraph& g) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, NodeId node, std::optional<NodeId> head, std::string msg) {
    out.push_back(Violation{kind, node, head, std::move(msg)});
  };
  auto arc_name = [](NodeId a, NodeId b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  for (NodeId id : g.node_ids()) {
    const NodeKind kind = g.kind(id);
    const auto succ = g.successors(id);
    const std::string name = std::string(to_string(kind)) + " node " + std::to_string(id);

    for (NodeId j : succ) {
      const Rational& w = g.weight(id, j);
      if (w.sign() <= 0 || w > Rational(1)) {
        report(ViolationKind::WeightRange, id, j,
               "arc " + arc_name(id, j) + " weight " + w.str() + " outside (0, 1]");
      }
    }

    switch (kind) {
      case NodeKind::Source:
        if (succ.size() != 1) {
          report(ViolationKind::SourceOutDegree, id, std::nullopt,
                 name + " has " + std::to_string(succ.size()) + " successors; a source feeds exactly one node");
        }
        if (!g.predecessors(id).empty()) {
          report(ViolationKind::SourcePredecessor, id, std::nullopt, name + " has predecessors");
        }
        if (g.theta(id).sign() <= 0) {
          report(ViolationKind::SourceTheta, id, std::nullopt, name + " has non-positive theta " + g.theta(id).str());
        }
        break;
      case NodeKind::Output:
        if (!succ.empty()) {
          report(ViolationKind::OutputSuccessor, id, std::nullopt, name + " has successors");
        }
        break;
      case NodeKind::Split:
      case NodeKind::CoProduct:
        if (succ.empty()) {
          report(ViolationKind::IsolatedIntermediate, id, std::nullopt, name + " has no successors");
        } else if (kind == NodeKind::CoProduct && succ.size() < 2) {
          report(ViolationKind::CoProductOutDegree, id, std::nullopt, name + " has fewer than 2 successors");
        }
        break;
    }

    if ((kind == NodeKind::Source || kind == NodeKind::Split) && !succ.empty()) {
      Rational sum;
      for (NodeId j : succ) sum += g.weight(id, j);
      if (sum != Rational(1)) {
        report(ViolationKind::SplitWeightSum, id, std::nullopt,
               name + ": " + std::string(kind == NodeKind::Split ? "split" : "source") + " weights sum to " +
                   sum.str() + " ≠ 1");
      }
    }
    if (kind == NodeKind::CoProduct) {
      for (NodeId j : succ) {
        if (g.weight(id, j) != Rational(1)) {
          report(ViolationKind::CoProductWeight, id, j,
                 name + ": co-product arc weight ≠ 1 on " + arc_name(id, j) + " (" + g.weight(id, j).str() + ")");
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Topological order

TopologicalResult topological_order(const EmergyGraph& g) {
  std::map<NodeId, std::size_t> indegree;
  for (NodeId id : g.node_ids()) indegree[id] = g.predecessors(id).size();

  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (const auto& [id, d] : indegree) {
    if (d == 0) ready.push(id);
  }
  TopologicalResult result;
  while (!ready.empty()) {
    const NodeId id = ready.top();
    ready.pop();
    result.order.push_back(id);
    for (NodeId j : g.successors(id)) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (result.order.size() == g.node_count()) return result;

  // Every unprocessed node keeps an unprocessed predecessor; walking those
  // backwards must revisit a node.
  std::set<NodeId> processed(result.order.begin(), result.order.end());
  NodeId cur = 0;
  for (const auto& [id, d] : indegree) {
    if (!processed.contains(id)) {
      cur = id;
      break;
    }
  }
  std::vector<NodeId> walk;
  std::map<NodeId, std::size_t> seen_at;
  while (!seen_at.contains(cur)) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    for (NodeId p : g.predecessors(cur)) {
      if (!processed.contains(p)) {
        cur = p;
        break;
      }
    }
  }
  std::vector<NodeId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  result.order.clear();
  result.cycle = std::move(cycle);
  return result;
}

void require_target_arc(const EmergyGraph& g, const TargetArc& arc) {
  if (arc.tail == arc.head) throw std::invalid_argument("target arc must join two distinct nodes");
  if (!g.has_arc(arc.tail, arc.head)) {
    throw std::invalid_argument("(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
                                ") is not an arc of the graph");
  }
}

}  // namespace emergy
