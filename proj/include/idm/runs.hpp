#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idm/lce.hpp"
#include "idm/types.hpp"

namespace idm {

/// Maximal repetition T[start..end] with smallest period `period`.
struct Run {
    Index start = 0;
    Index end = 0;
    Index period = 0;

    Index length() const { return end - start + 1; }
    friend constexpr auto operator<=>(const Run&, const Run&) = default;
};

/// All runs of the text, sorted by (start, end). Candidates are the longest
/// Lyndon words at each position under both letter orders; `forward` is LCE
/// over the text and `backward` LCE over its reversal.
std::vector<Run> compute_runs(std::span<const Letter> text, const Lce& forward, const Lce& backward);

/*
 * Dominance minimum over runs seen as points (start, end) weighted by period:
 * the run of smallest period among those with start <= i and end >= j.
 * Merge-sort tree over runs ordered by start, O(log^2 r) per query.
 */
class RunIndex {
public:
    RunIndex() = default;
    explicit RunIndex(std::vector<Run> runs);

    const std::vector<Run>& runs() const { return runs_; }

    /// The run containing f with smallest period, if any.
    std::optional<Run> min_period_cover(Fragment f) const;
    /// Smallest period of f when it is at most |f|/2.
    std::optional<Index> two_period(Fragment f) const;
    /// The run R containing f with per(R) = per(f), when f is periodic.
    std::optional<Run> periodic_extension(Fragment f) const;

private:
    struct Entry {
        Index end;
        Index best;  // run index with smallest period among entries up to here
    };

    std::vector<Run> runs_;
    std::vector<Index> starts_;
    // tree_[level][k]: runs of each aligned block, by end decreasing.
    std::vector<std::vector<Entry>> tree_;
};

}  // namespace idm
