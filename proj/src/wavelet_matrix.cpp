#include "idm/wavelet_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace idm {

BitRank::BitRank(const std::vector<bool>& bits) : size_(static_cast<Index>(bits.size())) {
    words_.assign((bits.size() >> 6) + 1, 0);
    for (Index i = 0; i < size_; ++i) {
        if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    cumulative_.assign(words_.size() + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        cumulative_[w + 1] = cumulative_[w] + std::popcount(words_[w]);
    }
}

Index BitRank::rank1(Index i) const {
    const Index w = i >> 6, b = i & 63;
    Index r = cumulative_[w];
    if (b) r += std::popcount(words_[w] & ((std::uint64_t{1} << b) - 1));
    return r;
}

WaveletMatrix::WaveletMatrix(std::span<const Index> values, const std::vector<bool>& negative)
    : size_(static_cast<Index>(values.size())) {
    Index max_value = 0;
    for (Index v : values) {
        if (v < 0) throw std::invalid_argument("wavelet matrix values must be non-negative");
        max_value = std::max(max_value, v);
    }
    bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint32_t>(max_value))));
    const bool is_signed = !negative.empty();

    std::vector<Index> cur(values.begin(), values.end()), next(size_);
    std::vector<char> neg(size_, 0), next_neg(size_, 0);
    if (is_signed) {
        for (Index k = 0; k < size_; ++k) neg[k] = negative[k];
        negative_ = BitRank(negative);
    }
    for (int level = 0; level < bits_; ++level) {
        const int shift = bits_ - 1 - level;
        std::vector<bool> bitv(size_), negzero(is_signed ? size_ : 0);
        for (Index k = 0; k < size_; ++k) {
            bitv[k] = (cur[k] >> shift) & 1;
            if (is_signed) negzero[k] = !bitv[k] && neg[k];
        }
        Index z = 0;
        for (Index k = 0; k < size_; ++k) {
            if (!bitv[k]) {
                next[z] = cur[k];
                next_neg[z] = neg[k];
                ++z;
            }
        }
        zeros_.push_back(z);
        for (Index k = 0; k < size_; ++k) {
            if (bitv[k]) {
                next[z] = cur[k];
                next_neg[z] = neg[k];
                ++z;
            }
        }
        levels_.emplace_back(bitv);
        if (is_signed) negative_zeros_.emplace_back(negzero);
        std::swap(cur, next);
        std::swap(neg, next_neg);
    }
}

Index WaveletMatrix::count_less(Index l, Index r, Index v) const {
    if (l >= r || v <= 0) return 0;
    if (bits_ < 31 && v >= (Index{1} << bits_)) return r - l;
    Index result = 0;
    for (int level = 0; level < bits_; ++level) {
        const int shift = bits_ - 1 - level;
        const BitRank& bv = levels_[level];
        const Index l0 = bv.rank0(l), r0 = bv.rank0(r);
        if ((v >> shift) & 1) {
            result += r0 - l0;
            l = zeros_[level] + (l - l0);
            r = zeros_[level] + (r - r0);
        } else {
            l = l0;
            r = r0;
        }
    }
    return result;
}

Count WaveletMatrix::signed_count_less(Index r, Index v) const {
    if (r <= 0 || v <= 0) return 0;
    const bool is_signed = !negative_zeros_.empty();
    if (bits_ < 31 && v >= (Index{1} << bits_)) {
        return is_signed ? Count{r} - 2 * Count{negative_.rank1(r)} : Count{r};
    }
    Index l = 0;
    Count result = 0;
    for (int level = 0; level < bits_; ++level) {
        const int shift = bits_ - 1 - level;
        const BitRank& bv = levels_[level];
        const Index l0 = bv.rank0(l), r0 = bv.rank0(r);
        if ((v >> shift) & 1) {
            Count zeros = r0 - l0;
            if (is_signed) zeros -= 2 * Count{negative_zeros_[level].rank1(r) - negative_zeros_[level].rank1(l)};
            result += zeros;
            l = zeros_[level] + (l - l0);
            r = zeros_[level] + (r - r0);
        } else {
            l = l0;
            r = r0;
        }
    }
    return result;
}

void WaveletMatrix::report(Index l, Index r, Index lo, Index hi, std::vector<Index>& out) const {
    if (l >= r || lo > hi) return;
    report_rec(0, l, r, 0, lo, hi, out);
}

void WaveletMatrix::report_rec(int level, Index l, Index r, Index prefix, Index lo, Index hi,
                               std::vector<Index>& out) const {
    if (l >= r) return;
    const std::int64_t span_end = static_cast<std::int64_t>(prefix) + (std::int64_t{1} << (bits_ - level)) - 1;
    if (span_end < lo || prefix > hi) return;
    if (level == bits_) {
        out.insert(out.end(), r - l, prefix);
        return;
    }
    const BitRank& bv = levels_[level];
    const Index l0 = bv.rank0(l), r0 = bv.rank0(r);
    report_rec(level + 1, l0, r0, prefix, lo, hi, out);
    report_rec(level + 1, zeros_[level] + (l - l0), zeros_[level] + (r - r0), prefix | (Index{1} << (bits_ - 1 - level)),
               lo, hi, out);
}

}  // namespace idm
