#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "idm/modified_suffix_tree.hpp"
#include "idm/range_min.hpp"
#include "idm/text_index.hpp"
#include "idm/types.hpp"

namespace idm {

/// Patterns given as fragments of the text, deduplicated by content. Ids are
/// 0-based in order of first appearance.
class InternalDictionary {
public:
    InternalDictionary() = default;
    InternalDictionary(const TextIndex& index, std::span<const Fragment> fragments);

    Index size() const { return static_cast<Index>(fragments_.size()); }
    bool empty() const { return fragments_.empty(); }
    /// First fragment given for the pattern.
    Fragment fragment(Index id) const { return fragments_[id]; }
    Index length(Index id) const { return fragments_[id].length(); }
    Locus locus(Index id) const { return loci_[id]; }
    /// Id of each input fragment.
    const std::vector<Index>& input_ids() const { return input_ids_; }

    /// Id of the pattern equal to T[f], or kNone.
    Index find(const TextIndex& index, Fragment f) const;

    /// Marks for a modified suffix tree over the given pattern ids.
    std::vector<ModifiedSuffixTree::Mark> marks(std::span<const Index> ids) const;
    std::vector<ModifiedSuffixTree::Mark> marks() const;

private:
    static std::uint64_t key(Locus l) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.node)) << 32) |
               static_cast<std::uint32_t>(l.length);
    }

    std::vector<Fragment> fragments_;
    std::vector<Locus> loci_;
    std::vector<Index> input_ids_;
    std::unordered_map<std::uint64_t, Index> by_locus_;
};

/*
 * Exists and Report over a modified suffix tree. B[a] is the end of the
 * shortest pattern starting at a (or infinity); patterns inside T[i..j]
 * start exactly at the a in [i..j] with B[a] <= j.
 */
class OccurrenceIndex {
public:
    OccurrenceIndex() = default;
    OccurrenceIndex(ModifiedSuffixTree tree, Index n);

    const ModifiedSuffixTree& tree() const { return tree_; }
    Index shortest_end(Index a) const { return b_[a - 1]; }

    bool exists(Index i, Index j) const { return b_.min(i - 1, j - 1) <= j; }
    /// Appends all occurrences inside T[i..j]; order unspecified.
    void report(Index i, Index j, std::vector<Occurrence>& out) const;
    /// Appends the starts a in [i..j] with B[a] <= j.
    void starts(Index i, Index j, std::vector<Index>& out) const;

private:
    ModifiedSuffixTree tree_;
    RangeMin<Index> b_;
};

}  // namespace idm
