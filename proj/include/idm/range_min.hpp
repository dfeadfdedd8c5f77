#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "idm/types.hpp"

namespace idm {

/*
 * Range minimum queries in O(1): a sparse table over blocks of 64 values,
 * plus per-position monotone-stack bitmasks for the in-block parts.
 * Ties resolve to the leftmost position.
 */
template <typename T>
class RangeMin {
public:
    RangeMin() = default;

    explicit RangeMin(std::vector<T> values) : values_(std::move(values)) {
        const Index n = size();
        masks_.assign(values_.size(), 0);
        for (Index block_start = 0; block_start < n; block_start += kBlock) {
            const Index block_end = std::min<Index>(n, block_start + kBlock);
            std::uint64_t stack = 0;
            for (Index i = block_start; i < block_end; ++i) {
                while (stack != 0) {
                    const Index top = block_start + 63 - std::countl_zero(stack);
                    if (values_[top] > values_[i]) {
                        stack &= ~(std::uint64_t{1} << (top - block_start));
                    } else {
                        break;
                    }
                }
                stack |= std::uint64_t{1} << (i - block_start);
                masks_[i] = stack;
            }
        }
        const Index blocks = (n + kBlock - 1) / kBlock;
        if (blocks == 0) return;
        table_.emplace_back(blocks);
        for (Index b = 0; b < blocks; ++b) {
            table_[0][b] = in_block(b * kBlock, std::min<Index>(n, (b + 1) * kBlock) - 1);
        }
        for (Index k = 1; (Index{1} << k) <= blocks; ++k) {
            const Index half = Index{1} << (k - 1);
            const auto& prev = table_[k - 1];
            std::vector<Index> row(blocks - (Index{1} << k) + 1);
            for (Index b = 0; b < static_cast<Index>(row.size()); ++b) {
                row[b] = better(prev[b], prev[b + half]);
            }
            table_.push_back(std::move(row));
        }
    }

    Index size() const { return static_cast<Index>(values_.size()); }
    const T& operator[](Index i) const { return values_[i]; }
    const std::vector<T>& values() const { return values_; }

    /// Leftmost position of the minimum of values[l..r], 0-based inclusive.
    Index argmin(Index l, Index r) const {
        const Index bl = l / kBlock;
        const Index br = r / kBlock;
        if (bl == br) return in_block(l, r);
        Index best = in_block(l, bl * kBlock + kBlock - 1);
        if (bl + 1 <= br - 1) best = better(best, blocks_argmin(bl + 1, br - 1));
        return better(best, in_block(br * kBlock, r));
    }

    const T& min(Index l, Index r) const { return values_[argmin(l, r)]; }

private:
    static constexpr Index kBlock = 64;

    // a is left of b
    Index better(Index a, Index b) const { return values_[b] < values_[a] ? b : a; }

    Index in_block(Index l, Index r) const {
        const Index block_start = r - r % kBlock;
        const std::uint64_t m = masks_[r] & (~std::uint64_t{0} << (l - block_start));
        return block_start + std::countr_zero(m);
    }

    Index blocks_argmin(Index a, Index b) const {
        const int k = std::bit_width(static_cast<std::uint32_t>(b - a + 1)) - 1;
        return better(table_[k][a], table_[k][b - (Index{1} << k) + 1]);
    }

    std::vector<T> values_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<Index>> table_;
};

}  // namespace idm
