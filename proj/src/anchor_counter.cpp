#include "idm/anchor_counter.hpp"

#include <stdexcept>
#include <string>

namespace idm {

AnchorCounter::AnchorCounter(const TextIndex& forward, const TextIndex& backward,
                             const std::vector<AnchoredPattern>& patterns, bool colored)
    : n_(forward.size()), colored_(colored) {
    std::vector<ModifiedSuffixTree::Mark> right_marks, left_marks;
    for (const AnchoredPattern& p : patterns) {
        const Index s = p.fragment.start, e = p.fragment.end;
        for (Index b : p.breakpoints) {
            const Locus u = forward.locus({s + b, e});
            const Locus v = backward.locus({n_ - (s + b - 1) + 1, n_ - s + 1});
            right_marks.push_back({u, kNone});
            left_marks.push_back({v, kNone});
            rects_.push_back({{forward.rank_open(u), forward.rank_close(u), backward.rank_open(v), backward.rank_close(v)},
                              p.color});
        }
    }
    right_ = ModifiedSuffixTree(forward, std::move(right_marks));
    left_ = ModifiedSuffixTree(backward, std::move(left_marks));
    right_rank_.resize(right_.num_nodes());
    for (Index u = 0; u < right_.num_nodes(); ++u) right_rank_[u] = forward.rank_open(right_.locus(u));
    left_rank_.resize(left_.num_nodes());
    for (Index u = 0; u < left_.num_nodes(); ++u) left_rank_[u] = backward.rank_open(left_.locus(u));

    if (colored_) {
        colored_stab_ = ColoredStabCounter(rects_);
    } else {
        std::vector<Rect> plain;
        plain.reserve(rects_.size());
        for (const auto& r : rects_) plain.push_back(r.rect);
        stab_ = StabCounter(plain);
    }
}

Count AnchorCounter::count(Index x, Index i, Index j) const {
    if (!(1 <= i && i <= x && x < j && j <= n_)) {
        throw std::out_of_range("anchor " + std::to_string(x) + ".5 is not inside [" + std::to_string(i) + ".." +
                                std::to_string(j) + "]");
    }
    if (rects_.empty()) return 0;
    const Index u = right_.deepest_prefix(x + 1, j - x);
    const Index v = left_.deepest_prefix(n_ - x + 1, x - i + 1);
    if (u == 0 || v == 0) return 0;
    return colored_ ? colored_stab_.count(right_rank_[u], left_rank_[v]) : stab_.count(right_rank_[u], left_rank_[v]);
}

}  // namespace idm
