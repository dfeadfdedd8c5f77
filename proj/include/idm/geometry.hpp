#pragma once

#include <cstdint>
#include <vector>

#include "idm/range_min.hpp"
#include "idm/types.hpp"
#include "idm/wavelet_matrix.hpp"

namespace idm {

using Coord = std::int64_t;

struct Point {
    Coord x = 0;
    Coord y = 0;
    Count weight = 1;
};

/// Closed integer rectangle [x1..x2] x [y1..y2].
struct Rect {
    Coord x1 = 0, x2 = 0, y1 = 0, y2 = 0;

    bool contains(Coord x, Coord y) const { return x1 <= x && x <= x2 && y1 <= y && y <= y2; }
    friend constexpr auto operator<=>(const Rect&, const Rect&) = default;
};

struct ColoredRect {
    Rect rect;
    Index color = 0;
};

/*
 * Distinct colors in a range of an array. J[i] is the previous index with
 * the same color (or -1); the leftmost occurrences inside [l, r] are exactly
 * the i with J[i] < l, found by RMQ splitting.
 */
class ColorRangeReporter {
public:
    ColorRangeReporter() = default;
    explicit ColorRangeReporter(std::vector<Index> colors);

    Index size() const { return static_cast<Index>(colors_.size()); }
    const std::vector<Index>& previous() const { return previous_.values(); }

    /// Appends each distinct color of colors[l..r] once (0-based inclusive).
    void report(Index l, Index r, std::vector<Index>& out) const;

private:
    std::vector<Index> colors_;
    RangeMin<Index> previous_;
};

/// Sum of weights of points with x <= a and y <= b. A weight w is stored as
/// |w| unit points in a signed wavelet matrix.
class DominanceCounter {
public:
    DominanceCounter() = default;
    explicit DominanceCounter(std::vector<Point> points);

    Count count(Coord a, Coord b) const;
    Index num_units() const { return static_cast<Index>(xs_.size()); }

private:
    std::vector<Coord> xs_;  // x of each unit point, sorted
    std::vector<Coord> ys_;  // distinct y values, sorted
    WaveletMatrix matrix_;
};

/// Number of rectangles containing a point, by the four-corner signed reduction.
class StabCounter {
public:
    StabCounter() = default;
    explicit StabCounter(const std::vector<Rect>& rects);

    static std::vector<Point> reduction(const Rect& r);

    Count count(Coord x, Coord y) const { return dominance_.count(x, y); }
    Index num_rects() const { return num_rects_; }

private:
    DominanceCounter dominance_;
    Index num_rects_ = 0;
};

/// Pairwise disjoint rectangles with the same union as the input, by a sweep
/// over x-slabs; identical y-intervals of consecutive slabs are merged.
std::vector<Rect> decompose_color_class(const std::vector<Rect>& rects);

/// Number of distinct colors whose rectangles contain a point.
class ColoredStabCounter {
public:
    ColoredStabCounter() = default;
    explicit ColoredStabCounter(std::vector<ColoredRect> rects);

    Count count(Coord x, Coord y) const { return counter_.count(x, y); }
    Index num_disjoint_rects() const { return counter_.num_rects(); }

private:
    StabCounter counter_;
};

}  // namespace idm
