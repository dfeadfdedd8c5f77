#pragma once

#include <span>
#include <vector>

#include "idm/types.hpp"

namespace idm {

/*
 * Suffix tree of T$ built from its suffix and LCP arrays. Node ids are in
 * preorder with children in lexicographic order, so the subtree of v is the
 * id range [v, subtree_end(v)] and leaves appear in suffix-array order.
 */
class SuffixTree {
public:
    SuffixTree() = default;
    SuffixTree(std::span<const Index> sa, std::span<const Index> lcp);

    Index root() const { return 0; }
    Index num_nodes() const { return static_cast<Index>(depth_.size()); }

    /// String depth; a leaf's depth counts the sentinel.
    Index depth(Index v) const { return depth_[v]; }
    Index parent(Index v) const { return parent_[v]; }
    bool is_leaf(Index v) const { return leaf_position_[v] != 0; }
    /// Starting position of the suffix of a leaf, 0 for internal nodes.
    Index leaf_position(Index v) const { return leaf_position_[v]; }
    /// Suffix-array rank interval [lo, hi] of the leaves below v.
    Index lo(Index v) const { return lo_[v]; }
    Index hi(Index v) const { return hi_[v]; }
    Index subtree_end(Index v) const { return subtree_end_[v]; }
    bool is_ancestor(Index u, Index v) const { return u <= v && v <= subtree_end_[u]; }

    std::span<const Index> children(Index v) const {
        return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
    }

    /// Leaf of the suffix starting at pos, 1 <= pos <= n+1.
    Index leaf(Index pos) const { return leaf_of_position_[pos]; }

    /// Highest ancestor u of v (possibly v) with depth(u) >= d. Requires depth(v) >= d.
    Index weighted_ancestor(Index v, Index d) const;

private:
    std::vector<Index> depth_, parent_, leaf_position_, lo_, hi_, subtree_end_;
    std::vector<Index> child_begin_, child_list_;
    std::vector<Index> leaf_of_position_;
    std::vector<std::vector<Index>> up_;
};

}  // namespace idm
