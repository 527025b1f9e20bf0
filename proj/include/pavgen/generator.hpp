#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pavgen/rules.hpp"
#include "pavgen/word.hpp"

namespace pavgen {

enum class Traversal { DepthFirst, BreadthFirst };

struct GenerationConfig {
  PatternParam pattern;
  int target_ones = 0;
  Traversal traversal = Traversal::DepthFirst;
  /// When set, interior nodes (fewer than target_ones rises) are emitted too.
  bool emit_intermediate = false;
};

struct ParentEdge {
  Word parent;
  int h = 0;
  BranchTag branch;
};

/// One node of the generation tree. The label is the endpoint ordinate, the
/// root is the empty word with label 0 and no parent edge.
struct GenerationNode {
  Word word;
  int label = 0;
  int ones = 0;
  std::optional<ParentEdge> parent_edge;
};

using NodeSink = std::function<void(const GenerationNode&)>;

/// Walks the generation tree from the empty word. A node with m rises
/// expands with every h in [1, min(j, target - m)]; nodes at the target are
/// emitted and not expanded. Each word of the avoiding class with at most
/// target_ones rises is visited exactly once. Deterministic order: ascending
/// h, rule child order within each expansion.
void generate_all(const GenerationConfig& config, const NodeSink& sink);

/// Words with exactly n rises, in depth-first emission order.
std::vector<Word> generate_words(const PatternParam& p, int n,
                                 Traversal traversal = Traversal::DepthFirst);

/// c_0 .. c_{n_max} where c_n counts the avoiding words with n rises.
std::vector<std::uint64_t> count_by_ones(const PatternParam& p, int n_max);

inline constexpr std::size_t kTreeNodeGuard = 1'000'000;

enum class TreeFormat { Dot, Jsonl };

/// Writes the whole tree up to n_max rises. Throws std::runtime_error when
/// the node count would exceed `node_guard`.
void export_tree(const PatternParam& p, int n_max, TreeFormat format,
                 std::ostream& out, std::size_t node_guard = kTreeNodeGuard);

}  // namespace pavgen
