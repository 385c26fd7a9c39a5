#ifndef EMERGY_GENERATORS_HPP
#define EMERGY_GENERATORS_HPP

#include <cstdint>

#include "emergy/graph.hpp"
#include "emergy/hardness.hpp"
#include "emergy/rational.hpp"

namespace emergy {

/// s -> v0, then L layers v_{k-1} -> {a_k, b_k} -> v_k with halves on the
/// fork, then v_L -> output. Acyclic, 2^L emergy paths to the final arc,
/// and the optimum on that arc is exactly theta.
EmergyGraph diamond_chain(unsigned length, const Rational& theta = Rational(100));
TargetArc diamond_chain_target(unsigned length);

struct RandomGraphOptions {
  unsigned nodes = 8;  // total, at least 5
  double arc_density = 0.4;
  /// Arcs pointing backwards in the generation order; each one closes a
  /// directed cycle whenever such a pair exists.
  unsigned back_arcs = 0;
  double coproduct_ratio = 0.3;
  bool allow_splits = true;
};

/// Valid emergy graph with one or two sources, two outputs, and shuffled ids.
/// Deterministic for a given seed.
EmergyGraph random_emergy_graph(const RandomGraphOptions& options, std::uint64_t seed);

/// Digraph on vertices 1..n with each ordered pair an edge with probability
/// `arc_density`; start 1, target n.
Digraph random_digraph(unsigned vertices, double arc_density, std::uint64_t seed);

}  // namespace emergy

#endif  // EMERGY_GENERATORS_HPP
