#ifndef EMERGY_STATE_SOLVER_HPP
#define EMERGY_STATE_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "emergy/graph.hpp"
#include "emergy/paths.hpp"
#include "emergy/rational.hpp"

namespace emergy {

/// Prefix trie over the emergy paths of one source.
///
/// The trie is a cotree of the compatibility graph restricted to that source:
/// leaves below different children of a split node are compatible (join),
/// leaves below different children of a co-product node are not (union).
class PrefixTrie {
 public:
  struct Node {
    NodeId graph_node = 0;
    std::vector<std::size_t> children;  // ascending by graph_node
    std::optional<std::size_t> leaf;    // index into paths()
  };

  /// Throws std::invalid_argument if the paths do not share a first node or
  /// one path is a prefix of another.
  static PrefixTrie build(std::vector<EmergyPath> paths);

  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t index) const { return nodes_[index]; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<EmergyPath>& paths() const { return paths_; }

 private:
  std::vector<Node> nodes_;  // parents precede children
  std::vector<EmergyPath> paths_;
};

struct TrieOptimum {
  Rational value;
  std::vector<std::size_t> selected;  // ascending indices into PrefixTrie::paths()
};

/// Bottom-up cotree evaluation: split branches sum their children, co-product
/// branches keep the best child (ties go to the smallest graph node id).
/// Throws std::invalid_argument on branching at a source or output node.
TrieOptimum evaluate_trie(const EmergyGraph& g, const PrefixTrie& trie);

/// Set of pairwise compatible emergy paths.
struct EmergyState {
  std::vector<EmergyPath> paths;
  Rational value;
};

enum class SolveMethod { Auto, Cotree, Dag, Brute };

std::string_view to_string(SolveMethod method);

struct SolveStats {
  std::size_t path_count = 0;
  std::vector<std::size_t> trie_sizes;  // one per source with paths, ascending source id
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Rational value;
  EmergyState witness;
  SolveMethod method = SolveMethod::Cotree;
  SolveStats stats;
  /// Optimum contributed by each source that reaches the arc.
  std::vector<std::pair<NodeId, Rational>> per_source;
};

/// Exact maximum empower through per-source prefix tries.
SolveResult solve_general(const EmergyGraph& g, const TargetArc& arc);

inline constexpr std::size_t kDefaultBruteForceCap = 20;

struct SubsetOptimum {
  Rational value;
  std::vector<std::size_t> selected;  // ascending indices
};

/// Maximum of the summed phi over every pairwise compatible subset of
/// `paths`, by enumeration of all 2^n subsets. Ties go to the
/// lexicographically smallest index list. Throws std::length_error above `cap`.
SubsetOptimum max_compatible_subset(const EmergyGraph& g, std::span<const EmergyPath> paths,
                                    std::size_t cap = kDefaultBruteForceCap);

/// Oracle solver over every subset of the emergy paths.
SolveResult brute_force_solve(const EmergyGraph& g, const TargetArc& arc, std::size_t cap = kDefaultBruteForceCap);

/// True iff the paths are pairwise compatible.
bool is_emergy_state(const EmergyGraph& g, std::span<const EmergyPath> paths);

}  // namespace emergy

#endif  // EMERGY_STATE_SOLVER_HPP
