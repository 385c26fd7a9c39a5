#include "emergy/state_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "emergy/compatibility.hpp"

namespace emergy {

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Auto: return "auto";
    case SolveMethod::Cotree: return "cotree";
    case SolveMethod::Dag: return "dag";
    case SolveMethod::Brute: return "brute";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// PrefixTrie

PrefixTrie PrefixTrie::build(std::vector<EmergyPath> paths) {
  if (paths.empty()) throw std::invalid_argument("cannot build a trie over no paths");
  std::sort(paths.begin(), paths.end(), [](const EmergyPath& a, const EmergyPath& b) { return a.nodes < b.nodes; });

  PrefixTrie trie;
  trie.paths_ = std::move(paths);
  const NodeId first = trie.paths_.front().nodes.front();
  trie.nodes_.push_back(Node{first, {}, std::nullopt});

  for (std::size_t p = 0; p < trie.paths_.size(); ++p) {
    const auto& seq = trie.paths_[p].nodes;
    if (seq.empty() || seq.front() != first) {
      throw std::invalid_argument("trie paths must share their first node");
    }
    std::size_t cur = 0;
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (trie.nodes_[cur].leaf) {
        throw std::invalid_argument("path " + format_nodes(trie.paths_[*trie.nodes_[cur].leaf].nodes) +
                                    " is a prefix of " + format_nodes(seq));
      }
      auto& children = trie.nodes_[cur].children;
      // Input is sorted, so a matching child can only be the last one added.
      if (!children.empty() && trie.nodes_[children.back()].graph_node == seq[k]) {
        cur = children.back();
        continue;
      }
      const std::size_t idx = trie.nodes_.size();
      trie.nodes_[cur].children.push_back(idx);
      trie.nodes_.push_back(Node{seq[k], {}, std::nullopt});
      cur = idx;
    }
    if (!trie.nodes_[cur].children.empty() || trie.nodes_[cur].leaf) {
      throw std::invalid_argument("path " + format_nodes(seq) + " is a prefix of another path or repeated");
    }
    trie.nodes_[cur].leaf = p;
  }
  return trie;
}

TrieOptimum evaluate_trie(const EmergyGraph& g, const PrefixTrie& trie) {
  const std::size_t n = trie.size();
  std::vector<Rational> value(n);
  std::vector<std::size_t> best_child(n, 0);

  // Children have larger indices than their parent.
  for (std::size_t i = n; i-- > 0;) {
    const auto& node = trie.node(i);
    if (node.leaf) {
      value[i] = trie.paths()[*node.leaf].phi;
      continue;
    }
    if (node.children.size() == 1) {
      value[i] = value[node.children.front()];
      continue;
    }
    switch (g.kind(node.graph_node)) {
      case NodeKind::Split:
        for (std::size_t c : node.children) value[i] += value[c];
        break;
      case NodeKind::CoProduct:
        best_child[i] = node.children.front();
        for (std::size_t c : node.children) {
          if (value[c] > value[best_child[i]]) best_child[i] = c;
        }
        value[i] = value[best_child[i]];
        break;
      default:
        throw std::invalid_argument("trie branches at " + std::string(to_string(g.kind(node.graph_node))) +
                                    " node " + std::to_string(node.graph_node));
    }
  }

  TrieOptimum out;
  out.value = value[0];
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const auto& node = trie.node(i);
    if (node.leaf) {
      out.selected.push_back(*node.leaf);
    } else if (node.children.size() > 1 && g.kind(node.graph_node) == NodeKind::CoProduct) {
      stack.push_back(best_child[i]);
    } else {
      stack.insert(stack.end(), node.children.begin(), node.children.end());
    }
  }
  std::sort(out.selected.begin(), out.selected.end());
  return out;
}

// ---------------------------------------------------------------------------
// Solvers

SolveResult solve_general(const EmergyGraph& g, const TargetArc& arc) {
  const auto started = std::chrono::steady_clock::now();
  require_target_arc(g, arc);

  SolveResult result;
  result.method = SolveMethod::Cotree;
  for (NodeId s : g.sources()) {
    auto paths = enumerate_paths_from(g, s, arc);
    if (paths.empty()) continue;
    result.stats.path_count += paths.size();
    const PrefixTrie trie = PrefixTrie::build(std::move(paths));
    result.stats.trie_sizes.push_back(trie.size());
    TrieOptimum best = evaluate_trie(g, trie);
    result.value += best.value;
    result.per_source.emplace_back(s, best.value);
    for (std::size_t idx : best.selected) result.witness.paths.push_back(trie.paths()[idx]);
  }
  result.witness.value = result.value;
  result.stats.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

SubsetOptimum max_compatible_subset(const EmergyGraph& g, std::span<const EmergyPath> paths, std::size_t cap) {
  const std::size_t n = paths.size();
  if (n > cap) {
    throw std::length_error("brute force limited to " + std::to_string(cap) + " paths, got " + std::to_string(n));
  }
  if (n > 30) throw std::length_error("brute force cannot enumerate more than 2^30 subsets");

  std::vector<std::uint32_t> compat(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (compatible(g, paths[i].nodes, paths[j].nodes)) compat[i] |= std::uint32_t{1} << j;
    }
  }

  SubsetOptimum best;
  std::vector<std::size_t> members;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    bool feasible = true;
    for (std::size_t i = 0; i < n && feasible; ++i) {
      if ((mask >> i & 1U) && (mask & ~compat[i]) != 0) feasible = false;
    }
    if (!feasible) continue;
    Rational value;
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        value += paths[i].phi;
        members.push_back(i);
      }
    }
    if (value > best.value || (value == best.value && (best.selected.empty() || members < best.selected))) {
      best.value = value;
      best.selected = members;
    }
  }
  return best;
}

SolveResult brute_force_solve(const EmergyGraph& g, const TargetArc& arc, std::size_t cap) {
  const auto started = std::chrono::steady_clock::now();
  auto paths = enumerate_emergy_paths(g, arc);
  std::sort(paths.begin(), paths.end(), [](const EmergyPath& a, const EmergyPath& b) { return a.nodes < b.nodes; });

  const SubsetOptimum best = max_compatible_subset(g, paths, cap);
  SolveResult result;
  result.method = SolveMethod::Brute;
  result.value = best.value;
  result.stats.path_count = paths.size();
  std::map<NodeId, Rational> per_source;
  for (std::size_t idx : best.selected) {
    result.witness.paths.push_back(paths[idx]);
    per_source[paths[idx].source()] += paths[idx].phi;
  }
  result.per_source.assign(per_source.begin(), per_source.end());
  result.witness.value = result.value;
  result.stats.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

bool is_emergy_state(const EmergyGraph& g, std::span<const EmergyPath> paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!compatible(g, paths[i].nodes, paths[j].nodes)) return false;
    }
  }
  return true;
}

}  // namespace emergy
