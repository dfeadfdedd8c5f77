#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "idm/types.hpp"

namespace idm {

/// Bitvector with constant-time rank1 via per-word cumulative counts.
class BitRank {
public:
    BitRank() = default;
    explicit BitRank(const std::vector<bool>& bits);

    Index size() const { return size_; }
    bool operator[](Index i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    /// Number of ones in [0, i).
    Index rank1(Index i) const;
    Index rank0(Index i) const { return i - rank1(i); }

private:
    Index size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<Index> cumulative_;
};

/*
 * Wavelet matrix over a sequence of non-negative integers below 2^bits.
 * Answers "how many of values[l, r) are < v" and reports them, in
 * O(bits) time. An optional sign per element (+1/-1) gives signed counts.
 */
class WaveletMatrix {
public:
    WaveletMatrix() = default;
    WaveletMatrix(std::span<const Index> values, const std::vector<bool>& negative = {});

    Index size() const { return size_; }

    /// |{k in [l, r) : values[k] < v}|, 0-based half-open.
    Index count_less(Index l, Index r, Index v) const;
    /// |{k in [l, r) : lo <= values[k] <= hi}|.
    Index count_range(Index l, Index r, Index lo, Index hi) const {
        if (lo > hi || l >= r) return 0;
        return count_less(l, r, hi + 1) - count_less(l, r, lo);
    }
    /// Sum of signs over k in [0, r) with values[k] < v.
    Count signed_count_less(Index r, Index v) const;
    /// Values in [lo, hi] among values[l, r), with multiplicity, increasing.
    void report(Index l, Index r, Index lo, Index hi, std::vector<Index>& out) const;

private:
    void report_rec(int level, Index l, Index r, Index prefix, Index lo, Index hi, std::vector<Index>& out) const;

    Index size_ = 0;
    int bits_ = 0;
    std::vector<BitRank> levels_;
    std::vector<Index> zeros_;
    // per level, marks negative elements whose bit is 0; empty when unsigned
    std::vector<BitRank> negative_zeros_;
    BitRank negative_;
};

}  // namespace idm
