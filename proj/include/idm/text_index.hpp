#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idm/lce.hpp"
#include "idm/runs.hpp"
#include "idm/suffix_tree.hpp"
#include "idm/text.hpp"
#include "idm/types.hpp"

namespace idm {

/// Suffix-tree node for a fragment: the explicit node at or below the
/// locus, and the fragment length. Implicit when length < depth(node).
struct Locus {
    Index node = 0;
    Index length = 0;
};

/// Text together with its suffix array and tree, LCE and runs.
class TextIndex {
public:
    explicit TextIndex(Text text, bool with_runs = true);

    const Text& text() const { return text_; }
    Index size() const { return text_.size(); }

    const std::vector<Index>& suffix_array() const { return sa_; }
    const std::vector<Index>& lcp_array() const { return lcp_; }
    Index suffix_rank(Index pos) const { return lce_.rank(pos); }
    const SuffixTree& tree() const { return tree_; }

    /// Longest common prefix of T[a..] and T[b..]. Requires 1 <= a, b <= n.
    Index lce(Index a, Index b) const;
    /// Same without range checks; a or b may be n+1.
    Index lce_unchecked(Index a, Index b) const { return lce_(a, b); }

    Locus locus(Fragment f) const;
    /// Suffix-array rank interval of the suffixes prefixed by T[f].
    std::pair<Index, Index> sa_interval(Fragment f) const;

    /*
     * Ranks of U$ and U# among all such strings for substrings U, from a
     * DFS over the tree that adds edge lengths on the way down and up and 1
     * at each leaf. U is a prefix of V iff open(U) <= open(V) <= close(U).
     */
    std::int64_t rank_open(Locus l) const {
        return rank_open_[l.node] - (tree_.depth(l.node) - l.length);
    }
    std::int64_t rank_close(Locus l) const {
        return rank_close_[l.node] + (tree_.depth(l.node) - l.length);
    }

    const std::vector<Run>& runs() const { return run_index_.runs(); }
    const RunIndex& run_index() const { return run_index_; }
    std::optional<Index> two_period(Fragment f) const;
    std::optional<Run> periodic_extension(Fragment f) const;

private:
    Text text_;
    std::vector<Index> sa_, lcp_;
    Lce lce_;
    SuffixTree tree_;
    RunIndex run_index_;
    std::vector<std::int64_t> rank_open_, rank_close_;
};

}  // namespace idm
