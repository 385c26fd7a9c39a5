#include "emergy/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace emergy {

EmergyGraph diamond_chain(unsigned length, const Rational& theta) {
  EmergyGraph g;
  const Rational half(BigInt(1), BigInt(2));
  g.add_node(1, NodeKind::Source, theta);
  g.add_node(2, NodeKind::Split);
  g.add_arc(1, 2, Rational(1));
  NodeId prev = 2;
  for (NodeId k = 1; k <= length; ++k) {
    const NodeId a = 3 * k;
    const NodeId b = 3 * k + 1;
    const NodeId join = 3 * k + 2;
    g.add_node(a, NodeKind::Split);
    g.add_node(b, NodeKind::Split);
    g.add_node(join, NodeKind::Split);
    g.add_arc(prev, a, half);
    g.add_arc(prev, b, half);
    g.add_arc(a, join, Rational(1));
    g.add_arc(b, join, Rational(1));
    prev = join;
  }
  g.add_node(prev + 1, NodeKind::Output);
  g.add_arc(prev, prev + 1, Rational(1));
  return g;
}

TargetArc diamond_chain_target(unsigned length) {
  const NodeId last = 3 * NodeId{length} + 2;
  return TargetArc{last, last + 1};
}

namespace {

bool reaches(const std::vector<std::set<std::size_t>>& succ, std::size_t from, std::size_t to) {
  std::vector<char> seen(succ.size(), 0);
  std::vector<std::size_t> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t w : succ[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

EmergyGraph random_emergy_graph(const RandomGraphOptions& options, std::uint64_t seed) {
  if (options.nodes < 5) throw std::invalid_argument("random emergy graphs need at least 5 nodes");
  if (options.arc_density < 0.0 || options.arc_density > 1.0) {
    throw std::invalid_argument("arc density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto coin = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

  const std::size_t n = options.nodes;
  const std::size_t sources = (n >= 6 && coin(0.5)) ? 2 : 1;
  const std::size_t outputs = 2;
  const std::size_t first_mid = sources;
  const std::size_t first_out = n - outputs;

  // Positions are generation order; ids are a random relabelling.
  std::vector<NodeId> id(n);
  std::iota(id.begin(), id.end(), NodeId{1});
  std::shuffle(id.begin(), id.end(), rng);

  std::vector<NodeKind> kind(n, NodeKind::Split);
  for (std::size_t p = 0; p < n; ++p) {
    if (p < first_mid) {
      kind[p] = NodeKind::Source;
    } else if (p >= first_out) {
      kind[p] = NodeKind::Output;
    } else if (!options.allow_splits || coin(options.coproduct_ratio)) {
      kind[p] = NodeKind::CoProduct;
    }
  }

  std::vector<std::set<std::size_t>> succ(n);
  for (std::size_t p = first_mid; p < first_out; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (coin(options.arc_density)) succ[p].insert(q);
    }
    const std::size_t needed = kind[p] == NodeKind::CoProduct ? 2 : 1;
    while (succ[p].size() < needed) succ[p].insert(uniform(p + 1, n - 1));
  }

  for (unsigned k = 0; k < options.back_arcs; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> closing;
    std::vector<std::pair<std::size_t, std::size_t>> any;
    for (std::size_t p = first_mid; p < first_out; ++p) {
      for (std::size_t q = first_mid; q < p; ++q) {
        if (succ[p].contains(q)) continue;
        any.emplace_back(p, q);
        if (reaches(succ, q, p)) closing.emplace_back(p, q);
      }
    }
    const auto& pool = closing.empty() ? any : closing;
    if (pool.empty()) break;
    const auto [from, to] = pool[uniform(0, pool.size() - 1)];
    succ[from].insert(to);
  }

  for (std::size_t p = 0; p < first_mid; ++p) succ[p].insert(uniform(first_mid, first_out - 1));

  EmergyGraph g;
  for (std::size_t p = 0; p < n; ++p) {
    Rational theta;
    if (kind[p] == NodeKind::Source) {
      theta = Rational(BigInt(static_cast<unsigned long>(uniform(1, 100))),
                       BigInt(static_cast<unsigned long>(uniform(1, 3))));
    }
    g.add_node(id[p], kind[p], theta);
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (succ[p].empty()) continue;
    std::vector<long> shares;
    for (std::size_t i = 0; i < succ[p].size(); ++i) {
      shares.push_back(kind[p] == NodeKind::Split ? static_cast<long>(uniform(1, 4)) : 1);
    }
    const long total = std::accumulate(shares.begin(), shares.end(), 0L);
    std::size_t i = 0;
    for (std::size_t q : succ[p]) {
      const Rational w = kind[p] == NodeKind::Split ? Rational(BigInt(shares[i]), BigInt(total)) : Rational(1);
      g.add_arc(id[p], id[q], w);
      ++i;
    }
  }
  return g;
}

Digraph random_digraph(unsigned vertices, double arc_density, std::uint64_t seed) {
  if (vertices < 2) throw std::invalid_argument("random digraphs need at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(arc_density);
  Digraph d;
  for (NodeId v = 1; v <= vertices; ++v) d.vertices.push_back(v);
  for (NodeId a = 1; a <= vertices; ++a) {
    for (NodeId b = 1; b <= vertices; ++b) {
      if (a != b && coin(rng)) d.edges.emplace_back(a, b);
    }
  }
  d.start = 1;
  d.target = vertices;
  return d;
}

}  // namespace emergy
