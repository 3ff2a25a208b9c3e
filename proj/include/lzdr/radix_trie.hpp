#pragma once

#include <absl/container/flat_hash_map.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzdr/text.hpp"

namespace lzdr {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/// Backend of the child map.
enum class ChildStore : std::uint8_t {
    hashed,   ///< one hash table keyed by (node, first byte); expected O(1)
    ordered,  ///< per-node sorted vector; deterministic O(lg sigma)
};

/// succ-index assigned to a split node created while inserting F_x.
enum class SplitSuccPolicy : std::uint8_t {
    newest,     ///< x, the factor whose insertion caused the split
    inherited,  ///< the succ-index of the node below the split point
};

struct TrieOptions {
    ChildStore store = ChildStore::hashed;
    SplitSuccPolicy split_succ = SplitSuccPolicy::newest;
};

/// Compacted trie over factor strings of one text.
///
/// Edge labels are (pos, len) windows into the text. Besides the factor index
/// and succ-index, every node tracks the end position of its factor
/// (`factor_end`) and the smallest factor end in its subtree (`min_end`,
/// attained by `min_end_index`). Parsers that may only see factors ending
/// before a threshold use these to prune the descent.
class RadixTrie {
public:
    struct Node {
        Position edge_pos = 0;
        Length edge_len = 0;
        Length depth = 0;
        FactorIndex factor_index = 0;
        FactorIndex succ_index = 0;
        Position factor_end = kUnbounded;
        Position min_end = kUnbounded;
        FactorIndex min_end_index = 0;
    };

    explicit RadixTrie(const Text& text, TrieOptions options = {});

    NodeId root() const { return 0; }
    const Node& node(NodeId u) const { return nodes_[u]; }
    std::size_t node_count() const { return nodes_.size(); }
    bool is_factor(NodeId u) const { return nodes_[u].factor_index != 0; }
    const Text& text() const { return *text_; }
    const TrieOptions& options() const { return options_; }

    /// End node of the edge leaving `u` whose label starts with `c`.
    NodeId child(NodeId u, std::uint8_t c) const;

    /// Children of `u` ordered by first byte.
    std::vector<std::pair<std::uint8_t, NodeId>> children(NodeId u) const;

    /// Inserts T[b..e] as factor x (e >= b). Returns false if the string was
    /// already represented; the existing node stays the representative unless
    /// the new factor ends strictly earlier.
    bool insert(Position b, Position e, FactorIndex x);

    /// Preorder dump, one node per line: `depth factor_index succ_index label`.
    std::string dump() const;

private:
    NodeId new_node(NodeId parent, Position pos, Length len);
    void attach(NodeId parent, std::uint8_t c, NodeId v);
    void relink(NodeId parent, std::uint8_t c, NodeId v);
    static void lower_min(Node& v, Position e, FactorIndex x);

    const Text* text_;
    TrieOptions options_;
    std::vector<Node> nodes_;
    absl::flat_hash_map<std::uint64_t, NodeId> hashed_;
    std::vector<std::vector<std::pair<std::uint8_t, NodeId>>> ordered_;
};

}  // namespace lzdr
