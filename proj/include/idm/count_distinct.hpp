#pragma once

#include "idm/count.hpp"

namespace idm {

struct DistinctEstimate {
    Count value = 0;
    Index contained_nodes = 0;  // stored values added
    Index anchor_queries = 0;
};

/*
 * Approximate CountDistinct. Symbols store the number of distinct patterns
 * in g(A) (and in g(B^i) for powers); anchor queries count colors, one per
 * pattern. Each occurring pattern is counted at least once and at most once
 * per stored value or anchor used, so
 *   true <= value <= true * (contained_nodes + anchor_queries).
 */
class DistinctCountIndex : public ParseTreeCounter {
public:
    DistinctCountIndex() = default;
    DistinctCountIndex(const TextIndex& forward, const TextIndex& backward, const Rslp& rslp,
                       const InternalDictionary& dict);

    DistinctEstimate count_distinct(Index i, Index j, CountTrace* trace = nullptr) const;
};

}  // namespace idm
