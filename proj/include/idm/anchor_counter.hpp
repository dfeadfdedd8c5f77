#pragma once

#include <vector>

#include "idm/geometry.hpp"
#include "idm/modified_suffix_tree.hpp"
#include "idm/text_index.hpp"

namespace idm {

/// A pattern with its breakpoints; b stands for the split b + 1/2, 1 <= b < |P|.
struct AnchoredPattern {
    Fragment fragment;
    Index color = 0;
    std::vector<Index> breakpoints;
};

/*
 * Breakpoints-anchor counting. A breakpoint b of P = T[s..e] becomes the
 * rectangle [open(U), close(U)] x [open(V), close(V)] with U = T[s+b..e]
 * ranked in the text and V = (T[s..s+b-1]) reversed ranked in the reversed
 * text. For an anchor x + 1/2 inside [i..j], the point given by the deepest
 * U-string prefixing T[x+1..j] and the deepest V-string prefixing
 * (T[i..x]) reversed stabs exactly the rectangles of occurrences that
 * align a breakpoint with the anchor.
 */
class AnchorCounter {
public:
    AnchorCounter() = default;
    /// colored: count distinct colors instead of rectangles.
    AnchorCounter(const TextIndex& forward, const TextIndex& backward, const std::vector<AnchoredPattern>& patterns,
                  bool colored);

    /// Occurrences inside T[i..j] crossing x + 1/2 at one of their breakpoints.
    /// Requires i <= x < j.
    Count count(Index x, Index i, Index j) const;

    const std::vector<ColoredRect>& rects() const { return rects_; }

private:
    Index n_ = 0;
    bool colored_ = false;
    ModifiedSuffixTree right_, left_;
    std::vector<std::int64_t> right_rank_, left_rank_;  // open rank per node
    std::vector<ColoredRect> rects_;
    StabCounter stab_;
    ColoredStabCounter colored_stab_;
};

}  // namespace idm
