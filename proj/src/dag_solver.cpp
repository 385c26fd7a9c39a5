#include "emergy/dag_solver.hpp"

#include <algorithm>

#include "emergy/paths.hpp"

namespace emergy {

CyclicGraphError::CyclicGraphError(std::vector<NodeId> cycle)
    : std::runtime_error("graph has a directed cycle " + format_nodes(cycle)), cycle_(std::move(cycle)) {}

std::set<NodeId> reachability_to_target(const EmergyGraph& g, const TargetArc& arc) {
  require_target_arc(g, arc);
  std::set<NodeId> seen{arc.tail};
  std::vector<NodeId> stack{arc.tail};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId p : g.predecessors(v)) {
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return seen;
}

FTable compute_f(const EmergyGraph& g, const TargetArc& arc) {
  require_target_arc(g, arc);
  TopologicalResult topo = topological_order(g);
  if (!topo.acyclic()) throw CyclicGraphError(std::move(topo.cycle));

  FTable table;
  table.reachable = reachability_to_target(g, arc);
  for (auto it = topo.order.rbegin(); it != topo.order.rend(); ++it) {
    const NodeId i = *it;
    ++table.operations;
    Rational value;
    if (table.reachable.contains(i)) {
      const NodeKind kind = g.kind(i);
      if (i == arc.tail) {
        value = kind == NodeKind::Source ? g.theta(i) : g.weight(i, arc.head);
      } else {
        for (NodeId j : g.successors(i)) {
          ++table.operations;
          const Rational& fj = table.f.at(j);
          switch (kind) {
            case NodeKind::Source: value = g.theta(i) * fj; break;
            case NodeKind::Split: value += g.weight(i, j) * fj; break;
            case NodeKind::CoProduct: value = std::max(value, fj); break;
            case NodeKind::Output: break;
          }
        }
      }
    }
    table.f.emplace(i, std::move(value));
  }
  return table;
}

Rational solve_dag(const EmergyGraph& g, const TargetArc& arc) {
  const FTable table = compute_f(g, arc);
  Rational total;
  for (NodeId s : g.sources()) total += table.at(s);
  return total;
}

}  // namespace emergy
