#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "idm/text.hpp"
#include "idm/types.hpp"

namespace idm {

/*
 * Run-length straight-line program of the text built by recompression:
 * block stages replace maximal runs x^k (k >= 2) by power symbols and pair
 * stages replace adjacent pairs xy with x in L, y in R by concatenation
 * symbols. Stages alternate until one node is left; a stage with nothing to
 * do is skipped. The partition (L, R) of each pair stage is a greedy max-cut
 * of the adjacent-pair graph, oriented so that most adjacent pairs lie L->R.
 *
 * Parse-tree depth is at most kDepthFactor * ceil(log2 n) and each popped
 * sequence has at most kRunFactor * max(1, ceil(log2 n)) runs.
 */
class Rslp {
public:
    static constexpr Index kDepthFactor = 5;
    static constexpr Index kRunFactor = 10;

    enum class Kind : std::uint8_t { Terminal, Concat, Power };

    struct Symbol {
        Kind kind = Kind::Terminal;
        Letter letter = 0;  // terminals
        Index left = kNone;  // concat: B C; power: B
        Index right = kNone;  // concat: C; power: exponent
        Index length = 1;  // |g(A)|
        Index representative = kNone;  // leftmost parse-tree node with this label
    };

    struct Node {
        Index symbol = kNone;
        Index start = 0, end = 0;  // val(v) = T[start..end]
        Index first_child = 0;  // into children()
        Index num_children = 0;
    };

    Rslp() = default;
    explicit Rslp(const Text& text);

    Index text_size() const { return n_; }
    Index num_symbols() const { return static_cast<Index>(symbols_.size()); }
    const Symbol& symbol(Index a) const { return symbols_[a]; }
    Index start_symbol() const { return nodes_[root_].symbol; }

    Index num_nodes() const { return static_cast<Index>(nodes_.size()); }
    const Node& node(Index v) const { return nodes_[v]; }
    Index root() const { return root_; }
    std::span<const Index> children(Index v) const {
        return {children_.data() + nodes_[v].first_child, static_cast<std::size_t>(nodes_[v].num_children)};
    }
    Index parent(Index v) const { return parent_[v]; }
    /// Leaf node of text position pos.
    Index leaf(Index pos) const { return pos - 1; }
    /// Edges on the longest root-to-leaf path.
    Index depth() const { return depth_; }

    /// Expansion g(A).
    std::vector<Letter> expand(Index a) const;

    /// Chain of parse-tree nodes whose labels form the popped sequence of T[f].
    std::vector<Index> popped_nodes(Fragment f) const;

    struct SymbolRun {
        Index symbol;
        Index power;
    };
    /// Run-length encoded popped sequence.
    std::vector<SymbolRun> popped_sequence(Fragment f) const;

    /// Landmark set L(S) of the popped sequence of S = T[f], sorted.
    std::vector<Index> landmarks(Fragment f) const;
    /// Values b in L(S) with 1 <= b <= |S|-1; breakpoint b stands for b + 1/2.
    std::vector<Index> breakpoints(Fragment f) const;

    /// One production per line, children before parents.
    std::string dump(bool bytes_as_chars) const;

private:
    Index node_at(std::size_t level, Index k) const { return level < levels_.size() ? levels_[level].nodes[k] : root_; }

    struct Level {
        bool is_block = false;
        std::vector<Index> nodes;        // sequence entering this stage
        std::vector<Index> block_start;  // block stages: run extents per entry
        std::vector<Index> block_end;
        std::vector<char> right;         // pair stages: entry's symbol is in R
        std::vector<Index> up;           // index of the containing node one level up
    };

    Index n_ = 0;
    std::vector<Symbol> symbols_;
    std::vector<Node> nodes_;
    std::vector<Index> children_;
    std::vector<Index> parent_;
    std::vector<Level> levels_;
    Index root_ = 0;
    Index depth_ = 0;
};

/// ceil(log2 x) for x >= 1.
Index ceil_log2(Index x);

}  // namespace idm
