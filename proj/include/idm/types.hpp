#pragma once

#include <compare>
#include <cstdint>
#include <limits>

namespace idm {

/// A single text letter. Byte texts use 0..255; integer texts may use any
/// value that fits, as long as it stays above the sentinel.
using Letter = std::int64_t;

/// Positions, ranks and node handles. Text positions are 1-based.
using Index = std::int32_t;

/// Occurrence totals can exceed the index range on long texts.
using Count = std::int64_t;

inline constexpr Index kNone = -1;
inline constexpr Index kInfinity = std::numeric_limits<Index>::max();

/// Fragment T[start..end], both ends inclusive, 1-based.
struct Fragment {
    Index start = 1;
    Index end = 0;

    constexpr Index length() const { return end - start + 1; }
    constexpr bool empty() const { return end < start; }

    friend constexpr auto operator<=>(const Fragment&, const Fragment&) = default;
};

/// One occurrence reported by Report: pattern id and starting position.
struct Occurrence {
    Index pattern = kNone;
    Index start = 0;

    friend constexpr auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

}  // namespace idm
