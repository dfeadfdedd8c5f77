#include "idm/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace idm {

ColorRangeReporter::ColorRangeReporter(std::vector<Index> colors) : colors_(std::move(colors)) {
    std::vector<Index> prev(colors_.size(), -1);
    std::map<Index, Index> last;
    for (Index i = 0; i < size(); ++i) {
        auto [it, fresh] = last.try_emplace(colors_[i], i);
        if (!fresh) {
            prev[i] = it->second;
            it->second = i;
        }
    }
    previous_ = RangeMin<Index>(std::move(prev));
}

void ColorRangeReporter::report(Index l, Index r, std::vector<Index>& out) const {
    if (l > r) return;
    std::vector<std::pair<Index, Index>> todo{{l, r}};
    while (!todo.empty()) {
        const auto [a, b] = todo.back();
        todo.pop_back();
        const Index m = previous_.argmin(a, b);
        if (previous_[m] >= l) continue;
        out.push_back(colors_[m]);
        if (a < m) todo.push_back({a, m - 1});
        if (m < b) todo.push_back({m + 1, b});
    }
}

DominanceCounter::DominanceCounter(std::vector<Point> points) {
    std::erase_if(points, [](const Point& p) { return p.weight == 0; });
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (const Point& p : points) ys_.push_back(p.y);
    std::sort(ys_.begin(), ys_.end());
    ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());

    std::vector<Index> y_ranks;
    std::vector<bool> negative;
    for (const Point& p : points) {
        const Index rank = static_cast<Index>(std::lower_bound(ys_.begin(), ys_.end(), p.y) - ys_.begin());
        for (Count k = 0; k < std::abs(p.weight); ++k) {
            xs_.push_back(p.x);
            y_ranks.push_back(rank);
            negative.push_back(p.weight < 0);
        }
    }
    matrix_ = WaveletMatrix(y_ranks, negative);
}

Count DominanceCounter::count(Coord a, Coord b) const {
    const Index r = static_cast<Index>(std::upper_bound(xs_.begin(), xs_.end(), a) - xs_.begin());
    const Index v = static_cast<Index>(std::upper_bound(ys_.begin(), ys_.end(), b) - ys_.begin());
    return matrix_.signed_count_less(r, v);
}

std::vector<Point> StabCounter::reduction(const Rect& r) {
    return {{r.x1, r.y1, +1}, {r.x2 + 1, r.y1, -1}, {r.x1, r.y2 + 1, -1}, {r.x2 + 1, r.y2 + 1, +1}};
}

StabCounter::StabCounter(const std::vector<Rect>& rects) : num_rects_(static_cast<Index>(rects.size())) {
    std::vector<Point> points;
    points.reserve(4 * rects.size());
    for (const Rect& r : rects) {
        for (const Point& p : reduction(r)) points.push_back(p);
    }
    dominance_ = DominanceCounter(std::move(points));
}

std::vector<Rect> decompose_color_class(const std::vector<Rect>& rects) {
    std::vector<Coord> cuts;
    for (const Rect& r : rects) {
        cuts.push_back(r.x1);
        cuts.push_back(r.x2 + 1);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rect> out;
    // open rectangles: y-interval -> first x of the run of slabs covering it
    std::map<std::pair<Coord, Coord>, Coord> open;
    for (std::size_t s = 0; s + 1 <= cuts.size(); ++s) {
        std::vector<std::pair<Coord, Coord>> cover;
        if (s + 1 < cuts.size()) {
            const Coord xs = cuts[s], xe = cuts[s + 1] - 1;
            for (const Rect& r : rects) {
                if (r.x1 <= xs && xe <= r.x2) cover.push_back({r.y1, r.y2});
            }
            std::sort(cover.begin(), cover.end());
            std::vector<std::pair<Coord, Coord>> merged;
            for (const auto& iv : cover) {
                if (!merged.empty() && iv.first <= merged.back().second + 1) {
                    merged.back().second = std::max(merged.back().second, iv.second);
                } else {
                    merged.push_back(iv);
                }
            }
            cover = std::move(merged);
        }
        std::map<std::pair<Coord, Coord>, Coord> next;
        for (const auto& iv : cover) {
            const auto it = open.find(iv);
            next[iv] = it == open.end() ? cuts[s] : it->second;
        }
        for (const auto& [iv, x_start] : open) {
            if (!next.count(iv)) out.push_back({x_start, cuts[s] - 1, iv.first, iv.second});
        }
        open = std::move(next);
    }
    return out;
}

ColoredStabCounter::ColoredStabCounter(std::vector<ColoredRect> rects) {
    std::sort(rects.begin(), rects.end(), [](const ColoredRect& a, const ColoredRect& b) { return a.color < b.color; });
    std::vector<Rect> disjoint;
    for (std::size_t lo = 0; lo < rects.size();) {
        std::size_t hi = lo;
        std::vector<Rect> cls;
        while (hi < rects.size() && rects[hi].color == rects[lo].color) cls.push_back(rects[hi++].rect);
        if (cls.size() == 1) {
            disjoint.push_back(cls[0]);
        } else {
            for (const Rect& r : decompose_color_class(cls)) disjoint.push_back(r);
        }
        lo = hi;
    }
    counter_ = StabCounter(disjoint);
}

}  // namespace idm
