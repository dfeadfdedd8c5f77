#pragma once

#include <vector>

#include "idm/text_index.hpp"
#include "idm/wavelet_matrix.hpp"

namespace idm {

/*
 * Single-pattern internal pattern matching. Occurrences of P = T[f] inside
 * T[i..j] are the suffix-array entries in the rank interval of P whose
 * position lies in [i .. j-|P|+1], counted on a wavelet matrix over the
 * suffix array. The TextIndex must outlive this object.
 */
class IpmIndex {
public:
    /// Rank interval and length of a pattern, for repeated queries.
    struct Prepared {
        Index lo = 0, hi = -1, length = 0;
    };

    IpmIndex() = default;
    explicit IpmIndex(const TextIndex& index);

    Prepared prepare(Fragment pattern) const;
    Count count_prepared(const Prepared& p, Index i, Index j) const;

    Count count(Fragment pattern, Index i, Index j) const;
    bool exists(Fragment pattern, Index i, Index j) const { return count(pattern, i, j) > 0; }
    /// Appends the starting positions, increasing.
    void report(Fragment pattern, Index i, Index j, std::vector<Index>& out) const;

    /// Smallest a with T[a..a+|P|-1] = T[f].
    Index leftmost_occurrence(Fragment pattern) const;

private:
    const TextIndex* index_ = nullptr;
    WaveletMatrix by_rank_;  // position of each suffix-array entry
    std::vector<Index> leftmost_;  // per suffix-tree node
};

}  // namespace idm
