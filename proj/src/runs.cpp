#include "idm/runs.hpp"

#include <algorithm>
#include <iterator>

#include "idm/suffix_array.hpp"

namespace idm {

namespace {

// nse[i] = next position after i whose suffix is smaller; n+1 if none.
std::vector<Index> next_smaller_suffix(std::span<const Index> rank, Index n) {
    std::vector<Index> nse(n + 2, n + 1);
    std::vector<Index> stack;
    for (Index pos = 1; pos <= n + 1; ++pos) {
        while (!stack.empty() && rank[pos] < rank[stack.back()]) {
            nse[stack.back()] = pos;
            stack.pop_back();
        }
        stack.push_back(pos);
    }
    return nse;
}

}  // namespace

std::vector<Run> compute_runs(std::span<const Letter> text, const Lce& forward, const Lce& backward) {
    const Index n = static_cast<Index>(text.size());

    std::vector<Letter> inverted(text.begin(), text.end());
    for (Letter& c : inverted) c = -c;
    const auto inv_sa = build_suffix_array(inverted);
    const auto inv_rank = invert_suffix_array(inv_sa);

    std::vector<Index> fwd_rank(n + 2);
    for (Index pos = 1; pos <= n + 1; ++pos) fwd_rank[pos] = forward.rank(pos);

    std::vector<Run> runs;
    auto scan = [&](const std::vector<Index>& nse) {
        for (Index i = 1; i <= n; ++i) {
            const Index j = nse[i];
            const Index p = j - i;
            if (j > n) continue;
            const Index right = forward(i, j);
            // common suffix of T[..i-1] and T[..j-1]
            const Index left = i > 1 ? backward(n - i + 2, n - j + 2) : 0;
            if (left + right >= p) runs.push_back({i - left, j + right - 1, p});
        }
    };
    scan(next_smaller_suffix(fwd_rank, n));
    scan(next_smaller_suffix(inv_rank, n));

    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end(),
                           [](const Run& a, const Run& b) { return a.start == b.start && a.end == b.end; }),
               runs.end());
    return runs;
}

RunIndex::RunIndex(std::vector<Run> runs) : runs_(std::move(runs)) {
    const Index r = static_cast<Index>(runs_.size());
    starts_.resize(r);
    for (Index k = 0; k < r; ++k) starts_[k] = runs_[k].start;

    std::vector<Index> order(r);
    for (Index k = 0; k < r; ++k) order[k] = k;
    auto by_end_desc = [&](Index a, Index b) { return runs_[a].end > runs_[b].end; };
    for (Index width = 1; width <= r; width <<= 1) {
        if (width > 1) {
            for (Index lo = 0; lo < r; lo += width) {
                const Index mid = std::min(r, lo + width / 2), hi = std::min(r, lo + width);
                std::inplace_merge(order.begin() + lo, order.begin() + mid, order.begin() + hi, by_end_desc);
            }
        }
        std::vector<Entry> level(r);
        for (Index k = 0; k < r; ++k) {
            level[k] = {runs_[order[k]].end, order[k]};
            if (k % width != 0 && runs_[level[k - 1].best].period <= runs_[level[k].best].period) {
                level[k].best = level[k - 1].best;
            }
        }
        tree_.push_back(std::move(level));
    }
}

std::optional<Run> RunIndex::min_period_cover(Fragment f) const {
    const Index c = static_cast<Index>(std::upper_bound(starts_.begin(), starts_.end(), f.start) - starts_.begin());
    Index best = kNone;
    Index pos = 0;
    for (Index level = static_cast<Index>(tree_.size()) - 1; level >= 0; --level) {
        const Index width = Index{1} << level;
        if (pos + width > c) continue;
        const auto& entries = tree_[level];
        auto first = entries.begin() + pos, last = entries.begin() + pos + width;
        const auto it = std::partition_point(first, last, [&](const Entry& e) { return e.end >= f.end; });
        if (it != first) {
            const Index cand = std::prev(it)->best;
            if (best == kNone || runs_[cand].period < runs_[best].period) best = cand;
        }
        pos += width;
    }
    if (best == kNone) return std::nullopt;
    return runs_[best];
}

std::optional<Index> RunIndex::two_period(Fragment f) const {
    const auto run = min_period_cover(f);
    if (run && 2 * run->period <= f.length()) return run->period;
    return std::nullopt;
}

std::optional<Run> RunIndex::periodic_extension(Fragment f) const {
    const auto run = min_period_cover(f);
    if (run && 2 * run->period <= f.length()) return run;
    return std::nullopt;
}

}  // namespace idm
