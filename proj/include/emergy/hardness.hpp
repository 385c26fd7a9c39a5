#ifndef EMERGY_HARDNESS_HPP
#define EMERGY_HARDNESS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emergy/graph.hpp"
#include "emergy/rational.hpp"

namespace emergy {

/// Directed graph with distinguished start and target vertices, the input of
/// simple-path counting.
struct Digraph {
  std::vector<NodeId> vertices;                    // ascending
  std::vector<std::pair<NodeId, NodeId>> edges;    // ascending
  NodeId start = 0;
  NodeId target = 0;

  std::vector<NodeId> successors(NodeId v) const;
};

/// Line format shared with the emergy files:
///
///     vertex <id>
///     edge <from> <to>
///     start <id>
///     target <id>
///
/// Throws ParseError on syntax errors and on any well-formedness violation
/// (duplicates, undeclared endpoints, self-loops, start == target).
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

/// Throws std::invalid_argument unless `d` is well-formed.
void check_digraph(const Digraph& d);

/// Sum over i = 1..n of n!/(n-i)!, an upper bound on the number of simple paths.
BigInt upper_bound_B(std::size_t vertex_count);
inline BigInt upper_bound_B(const Digraph& d) { return upper_bound_B(d.vertices.size()); }

/// Emergy instance whose emergy on (target, sink_t) encodes the simple-path
/// counts of the digraph as base-B digits.
struct ReductionInstance {
  EmergyGraph graph;
  BigInt bound;
  NodeId source = 0;  // theta 1, feeds the digraph start
  NodeId sink_t = 0;  // output hanging off the digraph target
  NodeId sink_u = 0;  // output absorbing the remaining split mass
  TargetArc target;   // (digraph target, sink_t)
  Rational target_weight;
};

/// Digraph vertices become splits, digraph edges get weight 1/B, every
/// vertex except the target sends its remaining mass to u, and the target
/// sends its remaining mass to t (it has no arc to u, which keeps its
/// outgoing weights summing to 1). Added nodes use ids above the largest
/// digraph id.
ReductionInstance build_reduction(const Digraph& d);

/// Base-B digits n_2 .. n_imax of a value sum n_i / B^(i-2).
struct PathCountVector {
  static constexpr std::size_t kFirstIndex = 2;
  std::vector<BigInt> digits;  // digits[k] holds n_(k+2)

  const BigInt& at(std::size_t i) const { return digits.at(i - kFirstIndex); }
  BigInt total() const;
};

/// n_2 = floor(E'), then r <- (r - n_i) * B for each following digit.
/// Throws std::domain_error on a negative input, a digit >= B, or a nonzero
/// residual after the last digit.
PathCountVector decode_counts(const Rational& eprime, const BigInt& bound, std::size_t imax);

struct ReductionCount {
  BigInt bound;
  Rational empower;  // Em(target, sink_t)
  Rational eprime;   // Em / w(target, sink_t)
  PathCountVector counts;
  bool used_dag_solver = false;
};

inline constexpr std::size_t kDefaultReductionVertexCap = 12;

/// Runs the whole reduction: build, solve, divide out the final weight, decode.
/// Throws std::length_error above `vertex_cap` digraph vertices.
ReductionCount count_via_reduction(const Digraph& d, std::size_t vertex_cap = kDefaultReductionVertexCap);

/// Simple start->target paths by arc count (index = arcs), by backtracking.
std::vector<BigInt> count_simple_paths_by_length(const Digraph& d);

enum class CountMethod { Reduction, Dfs };

BigInt count_simple_paths(const Digraph& d, CountMethod method);

}  // namespace emergy

#endif  // EMERGY_HARDNESS_HPP
