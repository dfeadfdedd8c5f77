#pragma once

#include <span>
#include <utility>
#include <vector>

#include "idm/range_min.hpp"
#include "idm/types.hpp"

namespace idm {

/// Longest common extension over one text from its suffix array, inverse
/// and LCP array. Positions are 1-based; position n+1 is the empty suffix.
class Lce {
public:
    Lce() = default;
    Lce(std::span<const Index> sa, std::span<const Index> lcp);

    Index size() const { return n_; }
    Index rank(Index pos) const { return rank_[pos]; }

    Index operator()(Index a, Index b) const {
        if (a > n_ || b > n_) return 0;
        if (a == b) return n_ - a + 1;
        Index ra = rank_[a], rb = rank_[b];
        if (ra > rb) std::swap(ra, rb);
        return lcp_.min(ra + 1, rb);
    }

    /// Minimum LCP over ranks (lo, hi]: the depth of the LCA of two leaves.
    Index lcp_between_ranks(Index lo, Index hi) const { return lcp_.min(lo + 1, hi); }

private:
    Index n_ = 0;
    std::vector<Index> rank_;
    RangeMin<Index> lcp_;
};

}  // namespace idm
