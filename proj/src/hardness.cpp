#include "emergy/hardness.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "emergy/dag_solver.hpp"
#include "emergy/state_solver.hpp"
#include "text_format.hpp"

namespace emergy {

std::vector<NodeId> Digraph::successors(NodeId v) const {
  std::vector<NodeId> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digraph text format

Digraph parse_digraph(std::string_view text) {
  Digraph d;
  std::set<NodeId> vertices;
  std::set<std::pair<NodeId, NodeId>> edges;
  std::optional<NodeId> start;
  std::optional<NodeId> target;
  std::size_t last_line = 0;

  detail::for_each_line(text, [&](std::size_t line_no, const std::vector<detail::Token>& toks) {
    last_line = line_no;
    const auto& head = toks.front();
    auto expect_args = [&](std::size_t n, const char* usage) {
      if (toks.size() != n + 1) {
        throw ParseError(line_no, toks.size() > n + 1 ? toks[n + 1].column : head.column,
                         std::string("expected '") + usage + "'");
      }
    };
    auto declared = [&](const detail::Token& tok) {
      const NodeId id = detail::parse_node_id(tok, line_no);
      if (!vertices.contains(id)) throw ParseError(line_no, tok.column, "undeclared vertex " + std::to_string(id));
      return id;
    };

    if (head.text == "vertex") {
      expect_args(1, "vertex <id>");
      const NodeId id = detail::parse_node_id(toks[1], line_no);
      if (!vertices.insert(id).second) {
        throw ParseError(line_no, toks[1].column, "duplicate vertex " + std::to_string(id));
      }
    } else if (head.text == "edge") {
      expect_args(2, "edge <from> <to>");
      const NodeId from = declared(toks[1]);
      const NodeId to = declared(toks[2]);
      if (from == to) throw ParseError(line_no, toks[1].column, "self-loop edge on vertex " + std::to_string(from));
      if (!edges.emplace(from, to).second) {
        throw ParseError(line_no, head.column,
                         "duplicate edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
      }
    } else if (head.text == "start" || head.text == "target") {
      expect_args(1, head.text == "start" ? "start <id>" : "target <id>");
      auto& slot = head.text == "start" ? start : target;
      if (slot) throw ParseError(line_no, head.column, "repeated '" + std::string(head.text) + "'");
      slot = declared(toks[1]);
    } else {
      throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  });

  if (!start) throw ParseError(last_line + 1, 1, "missing 'start'");
  if (!target) throw ParseError(last_line + 1, 1, "missing 'target'");
  if (*start == *target) throw ParseError(last_line + 1, 1, "start and target must differ");

  d.vertices.assign(vertices.begin(), vertices.end());
  d.edges.assign(edges.begin(), edges.end());
  d.start = *start;
  d.target = *target;
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::ostringstream os;
  for (NodeId v : d.vertices) os << "vertex " << v << '\n';
  for (const auto& [a, b] : d.edges) os << "edge " << a << ' ' << b << '\n';
  os << "start " << d.start << '\n' << "target " << d.target << '\n';
  return os.str();
}

void check_digraph(const Digraph& d) {
  const std::set<NodeId> vs(d.vertices.begin(), d.vertices.end());
  if (vs.size() != d.vertices.size()) throw std::invalid_argument("duplicate digraph vertex");
  if (!vs.contains(d.start) || !vs.contains(d.target)) {
    throw std::invalid_argument("start and target must be digraph vertices");
  }
  if (d.start == d.target) throw std::invalid_argument("start and target must differ");
  std::set<std::pair<NodeId, NodeId>> es;
  for (const auto& e : d.edges) {
    if (e.first == e.second) throw std::invalid_argument("self-loop edge in digraph");
    if (!vs.contains(e.first) || !vs.contains(e.second)) throw std::invalid_argument("edge on undeclared vertex");
    if (!es.insert(e).second) throw std::invalid_argument("duplicate digraph edge");
  }
}

// ---------------------------------------------------------------------------
// Reduction

BigInt upper_bound_B(std::size_t vertex_count) {
  // n!/(n-i)! = n (n-1) ... (n-i+1), built incrementally.
  BigInt sum = 0;
  BigInt falling = 1;
  for (std::size_t i = 1; i <= vertex_count; ++i) {
    falling *= static_cast<unsigned long>(vertex_count - i + 1);
    sum += falling;
  }
  return sum;
}

ReductionInstance build_reduction(const Digraph& d) {
  check_digraph(d);
  ReductionInstance out;
  out.bound = upper_bound_B(d);
  const NodeId top = *std::max_element(d.vertices.begin(), d.vertices.end());
  out.source = top + 1;
  out.sink_t = top + 2;
  out.sink_u = top + 3;
  out.target = TargetArc{d.target, out.sink_t};

  EmergyGraph& g = out.graph;
  g.add_node(out.source, NodeKind::Source, Rational(1));
  for (NodeId v : d.vertices) g.add_node(v, NodeKind::Split);
  g.add_node(out.sink_t, NodeKind::Output);
  g.add_node(out.sink_u, NodeKind::Output);

  const Rational step(BigInt(1), out.bound);
  g.add_arc(out.source, d.start, Rational(1));
  for (const auto& [a, b] : d.edges) g.add_arc(a, b, step);
  for (NodeId v : d.vertices) {
    const std::size_t out_degree = d.successors(v).size();
    if (BigInt(static_cast<unsigned long>(out_degree)) >= out.bound) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has out-degree >= B");
    }
    const Rational rest = Rational(1) - Rational(static_cast<long>(out_degree)) * step;
    if (v == d.target) {
      g.add_arc(v, out.sink_t, rest);
      out.target_weight = rest;
    } else {
      g.add_arc(v, out.sink_u, rest);
    }
  }
  return out;
}

BigInt PathCountVector::total() const {
  BigInt sum = 0;
  for (const auto& n : digits) sum += n;
  return sum;
}

PathCountVector decode_counts(const Rational& eprime, const BigInt& bound, std::size_t imax) {
  if (eprime.sign() < 0) throw std::domain_error("cannot decode a negative value");
  if (bound <= 0) throw std::domain_error("base must be positive");
  PathCountVector out;
  Rational residual = eprime;
  const Rational base(bound);
  for (std::size_t i = PathCountVector::kFirstIndex; i <= imax; ++i) {
    BigInt digit = residual.floor();
    if (digit >= bound) {
      throw std::domain_error("digit n_" + std::to_string(i) + " = " + digit.get_str() + " is not below B");
    }
    residual = (residual - Rational(digit)) * base;
    out.digits.push_back(std::move(digit));
  }
  if (!residual.is_zero()) throw std::domain_error("nonzero residual after the last digit");
  return out;
}

ReductionCount count_via_reduction(const Digraph& d, std::size_t vertex_cap) {
  if (d.vertices.size() > vertex_cap) {
    throw std::length_error("reduction limited to " + std::to_string(vertex_cap) + " vertices");
  }
  const ReductionInstance inst = build_reduction(d);
  ReductionCount out;
  out.bound = inst.bound;
  // Without co-products every set of emergy paths is a state, so either
  // solver returns the sum of all path values.
  if (topological_order(inst.graph).acyclic()) {
    out.empower = solve_dag(inst.graph, inst.target);
    out.used_dag_solver = true;
  } else {
    out.empower = solve_general(inst.graph, inst.target).value;
  }
  out.eprime = out.empower / inst.target_weight;
  out.counts = decode_counts(out.eprime, inst.bound, d.vertices.size() + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Direct counting

namespace {

void count_from(const Digraph& d, const std::map<NodeId, std::vector<NodeId>>& succ, NodeId v, std::size_t depth,
                std::set<NodeId>& on_path, std::vector<BigInt>& by_length) {
  if (v == d.target) {
    by_length[depth] += 1;
    return;
  }
  for (NodeId w : succ.at(v)) {
    if (on_path.contains(w)) continue;
    on_path.insert(w);
    count_from(d, succ, w, depth + 1, on_path, by_length);
    on_path.erase(w);
  }
}

}  // namespace

std::vector<BigInt> count_simple_paths_by_length(const Digraph& d) {
  check_digraph(d);
  std::map<NodeId, std::vector<NodeId>> succ;
  for (NodeId v : d.vertices) succ[v];
  for (const auto& [a, b] : d.edges) succ[a].push_back(b);
  std::vector<BigInt> by_length(d.vertices.size(), BigInt(0));
  std::set<NodeId> on_path{d.start};
  count_from(d, succ, d.start, 0, on_path, by_length);
  return by_length;
}

BigInt count_simple_paths(const Digraph& d, CountMethod method) {
  if (method == CountMethod::Reduction) return count_via_reduction(d).counts.total();
  BigInt total = 0;
  for (const auto& n : count_simple_paths_by_length(d)) total += n;
  return total;
}

}  // namespace emergy
