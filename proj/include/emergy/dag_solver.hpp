#ifndef EMERGY_DAG_SOLVER_HPP
#define EMERGY_DAG_SOLVER_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "emergy/graph.hpp"
#include "emergy/rational.hpp"

namespace emergy {

class CyclicGraphError : public std::runtime_error {
 public:
  explicit CyclicGraphError(std::vector<NodeId> cycle);
  const std::vector<NodeId>& cycle() const { return cycle_; }

 private:
  std::vector<NodeId> cycle_;
};

/// Nodes with a directed path to the tail of `arc`, the tail included.
/// Linear-time traversal over reversed arcs.
std::set<NodeId> reachability_to_target(const EmergyGraph& g, const TargetArc& arc);

/// Per-node optimum of the rooted subproblem: the best value over compatible
/// sets of paths that start at a node and end with the target arc.
struct FTable {
  std::map<NodeId, Rational> f;
  std::set<NodeId> reachable;
  /// Node visits plus successor terms folded; bounded by |V| + |A|.
  std::size_t operations = 0;

  const Rational& at(NodeId id) const { return f.at(id); }
};

/// Fills f in reverse topological order:
///   tail l:             theta(l) if l is a source, else w(l, l')
///   source s != l:      theta(s) * f(succ(s))
///   split i != l:       sum over successors of w(i, j) * f(j)
///   co-product i != l:  max over successors of f(j)
/// and 0 for every node that cannot reach l. Throws CyclicGraphError.
FTable compute_f(const EmergyGraph& g, const TargetArc& arc);

/// Maximum empower on an acyclic graph: the sum of f over the sources.
Rational solve_dag(const EmergyGraph& g, const TargetArc& arc);

}  // namespace emergy

#endif  // EMERGY_DAG_SOLVER_HPP
