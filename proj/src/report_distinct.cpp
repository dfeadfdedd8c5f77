#include "idm/report_distinct.hpp"

#include <algorithm>
#include <bit>

namespace idm {

namespace {

Index floor_log2(Index x) { return static_cast<Index>(std::bit_width(static_cast<std::uint32_t>(x))) - 1; }

}  // namespace

DistinctIndex::DistinctIndex(const TextIndex& index, const InternalDictionary& dict)
    : n_(index.size()), d_(dict.size()) {
    std::vector<std::vector<Index>> by_layer(floor_log2(n_) + 1);
    for (Index id = 0; id < dict.size(); ++id) by_layer[floor_log2(dict.length(id))].push_back(id);

    for (Index k = 0; k < static_cast<Index>(by_layer.size()); ++k) {
        if (by_layer[k].empty()) continue;
        Layer L;
        L.k = k;
        for (Index id : by_layer[k]) {
            const auto per = index.two_period(dict.fragment(id));
            const bool periodic = per && 3 * *per <= (Index{1} << k);
            (periodic ? L.periodic_ids : L.aperiodic_ids).push_back(id);
        }
        L.all = ModifiedSuffixTree(index, dict.marks(by_layer[k]));
        std::vector<Index> longest(n_);
        for (Index a = 1; a <= n_; ++a) longest[a - 1] = L.all.leaf_parent(a);
        L.longest = ColorRangeReporter(std::move(longest));

        if (!L.aperiodic_ids.empty()) {
            L.has_aperiodic = true;
            L.aperiodic = OccurrenceIndex(ModifiedSuffixTree(index, dict.marks(L.aperiodic_ids)), n_);
        }
        if (!L.periodic_ids.empty()) {
            L.has_periodic = true;
            L.periodic = ModifiedSuffixTree(index, dict.marks(L.periodic_ids));
            std::vector<Index> shortest(n_);
            for (Index a = 1; a <= n_; ++a) {
                const Index u = L.periodic.leaf_parent(a);
                shortest[a - 1] = u == 0 ? kInfinity : a + L.periodic.depth(L.periodic.top(u)) - 1;
            }
            L.shortest_periodic = RangeMin<Index>(std::move(shortest));
            for (const Run& r : index.runs()) {
                if (3 * r.period <= (Index{1} << k) && r.length() >= (Index{1} << k)) L.runs.push_back(r);
            }
            for (const Run& r : L.runs) L.run_ends.push_back(r.end);
        }
        layers_.push_back(std::move(L));
    }
}

const DistinctIndex::Layer* DistinctIndex::layer(Index k) const {
    for (const Layer& L : layers_) {
        if (L.k == k) return &L;
    }
    return nullptr;
}

std::vector<Index> DistinctIndex::layer_patterns(Index k, bool periodic) const {
    const Layer* L = layer(k);
    if (!L) return {};
    return periodic ? L->periodic_ids : L->aperiodic_ids;
}

std::vector<Run> DistinctIndex::runs_overlapping(Index k, Fragment w) const {
    std::vector<Run> out;
    const Layer* L = layer(k);
    const Index need = Index{1} << k;
    if (!L || w.length() < need) return out;
    auto it = std::lower_bound(L->run_ends.begin(), L->run_ends.end(), w.start + need - 1);
    for (auto r = L->runs.begin() + (it - L->run_ends.begin()); r != L->runs.end() && r->start <= w.end - need + 1; ++r) {
        out.push_back(*r);
    }
    return out;
}

void DistinctIndex::report_distinct(Index i, Index j, std::vector<Index>& out) const {
    thread_local DistinctScratch scratch;
    report_distinct(i, j, out, scratch);
}

void DistinctIndex::report_distinct(Index i, Index j, std::vector<Index>& out, DistinctScratch& scratch,
                                    DistinctTrace* trace) const {
    if (scratch.stamps.size() < static_cast<std::size_t>(d_)) scratch.stamps.resize(d_, 0);
    const std::uint64_t stamp = ++scratch.query;
    Index current_k = 0;
    auto emit = [&](Index id) {
        if (trace) trace->emissions.push_back({current_k, id});
        if (scratch.stamps[id] == stamp) return false;
        scratch.stamps[id] = stamp;
        out.push_back(id);
        return true;
    };

    const Index width = j - i + 1;
    std::vector<Index> colors, ids;
    std::vector<Occurrence> occs;
    for (const Layer& L : layers_) {
        if (L.k > floor_log2(width)) break;
        current_k = L.k;
        const Index span = Index{1} << (L.k + 1);

        // starts in [i .. j - 2^(k+1)]: every layer pattern there is a prefix of a reported color
        if (j - span >= i) {
            colors.clear();
            L.longest.report(i - 1, j - span - 1, colors);
            for (Index u : colors) {
                for (; u != 0; u = L.all.parent(u)) {
                    if (!emit(L.all.pattern(u))) break;
                }
            }
        }

        const Index t = std::max(i, j - span + 1);
        if (L.has_aperiodic) {
            occs.clear();
            L.aperiodic.report(t, j, occs);
            for (const Occurrence& o : occs) emit(o.pattern);
        }
        if (L.has_periodic) {
            for (const Run& r : runs_overlapping(L.k, {t, j})) {
                const Index xs = std::max(r.start, t), xe = std::min(r.end, j);
                const Index last = std::min(xe, xs + r.period - 1);
                std::vector<std::pair<Index, Index>> todo{{xs, last}};
                while (!todo.empty()) {
                    const auto [a, b] = todo.back();
                    todo.pop_back();
                    const Index q = L.shortest_periodic.argmin(a - 1, b - 1) + 1;
                    if (L.shortest_periodic[q - 1] > xe) continue;
                    ids.clear();
                    L.periodic.patterns_at(q, xe - q + 1, ids);
                    for (Index id : ids) emit(id);
                    if (a < q) todo.push_back({a, q - 1});
                    if (q < b) todo.push_back({q + 1, b});
                }
            }
        }
    }
}

}  // namespace idm
