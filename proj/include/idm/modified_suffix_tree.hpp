#pragma once

#include <vector>

#include "idm/text_index.hpp"
#include "idm/types.hpp"

namespace idm {

/*
 * Suffix tree contracted so that its internal nodes are the root (the empty
 * string) and the marked strings. Terminal nodes are the suffixes; only the
 * parent of each terminal is stored. Internal nodes are numbered in preorder.
 */
class ModifiedSuffixTree {
public:
    struct Mark {
        Locus locus;
        Index pattern = kNone;
    };

    ModifiedSuffixTree() = default;
    /// Marks with equal loci collapse to the first one.
    ModifiedSuffixTree(const TextIndex& index, std::vector<Mark> marks);

    Index root() const { return 0; }
    Index num_nodes() const { return static_cast<Index>(parent_.size()); }
    bool empty() const { return num_nodes() == 1; }

    Index parent(Index u) const { return parent_[u]; }
    Index depth(Index u) const { return locus_[u].length; }
    /// Number of marked ancestors including u itself.
    Index level(Index u) const { return level_[u]; }
    /// Ancestor at level 1; the root maps to itself.
    Index top(Index u) const { return top_[u]; }
    Index pattern(Index u) const { return pattern_[u]; }
    Locus locus(Index u) const { return locus_[u]; }
    Index subtree_end(Index u) const { return subtree_end_[u]; }
    bool is_ancestor(Index u, Index v) const { return u <= v && v <= subtree_end_[u]; }

    /// Parent of the terminal node of T[pos..], 1 <= pos <= n+1.
    Index leaf_parent(Index pos) const { return leaf_parent_[pos]; }

    /// Deepest marked prefix of T[pos..] of length at most max_len, or the root.
    Index deepest_prefix(Index pos, Index max_len) const;

    /// Patterns occurring at pos with length <= max_len, shortest first.
    void patterns_at(Index pos, Index max_len, std::vector<Index>& out) const;

    Index lca(Index u, Index v) const;

    /// Node marked with a given pattern id, kNone if absent.
    Index node_of_pattern(Index pattern) const;

private:
    std::vector<Index> parent_, level_, top_, pattern_, subtree_end_;
    std::vector<Locus> locus_;
    std::vector<Index> leaf_parent_;
    std::vector<std::vector<Index>> up_;
    std::vector<std::pair<Index, Index>> by_pattern_;  // sorted (pattern, node)
};

}  // namespace idm
