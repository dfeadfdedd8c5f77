#include "idm/count.hpp"

#include <algorithm>
#include <unordered_set>

namespace idm {

std::vector<AnchoredPattern> anchored_patterns(const Rslp& rslp, const InternalDictionary& dict) {
    std::vector<AnchoredPattern> out;
    out.reserve(dict.size());
    for (Index id = 0; id < dict.size(); ++id) {
        const Fragment f = dict.fragment(id);
        out.push_back({f, id, f.length() > 1 ? rslp.breakpoints(f) : std::vector<Index>{}});
    }
    return out;
}

void ParseTreeCounter::reserve_prefixes() {
    const Rslp& g = *rslp_;
    value_.assign(g.num_symbols(), 0);
    prefix_begin_.assign(g.num_symbols(), 0);
    Index total = 0;
    for (Index a = 0; a < g.num_symbols(); ++a) {
        prefix_begin_[a] = total;
        if (g.symbol(a).kind == Rslp::Kind::Power) total += g.symbol(a).right;
    }
    prefix_.assign(total, 0);
}

Count ParseTreeCounter::query(Index i, Index j, CountTrace* trace) const {
    require_range(i, j, rslp_->text_size());
    return descend(rslp_->root(), i, j, trace);
}

Count ParseTreeCounter::anchor(Index x, Index i, Index j, CountTrace* trace) const {
    if (trace) trace->anchors.push_back({x, i, j});
    return anchors_.count(x, i, j);
}

Count ParseTreeCounter::descend(Index v, Index i, Index j, CountTrace* trace) const {
    const Rslp::Node& node = rslp_->node(v);
    const Index a = node.start, b = node.end;
    if (b < i || a > j) return 0;
    if (i <= a && b <= j) {
        if (trace) trace->contained.push_back({a, b});
        return value_[node.symbol];
    }
    const Rslp::Symbol& sym = rslp_->symbol(node.symbol);
    const auto kids = rslp_->children(v);
    const Index lo = std::max(i, a), hi = std::min(j, b);

    if (sym.kind == Rslp::Kind::Concat) {
        const Index mid = rslp_->node(kids[0]).end;
        Count res = descend(kids[0], i, j, trace) + descend(kids[1], i, j, trace);
        if (lo <= mid && mid < hi) res += anchor(mid, lo, hi, trace);
        return res;
    }

    // Power: the cut children are u_l and u_r, everything between is contained.
    const Index len = rslp_->symbol(sym.left).length;
    const Index l = (lo - a) / len, r = (hi - a) / len;
    Count res = descend(kids[l], i, j, trace);
    if (l == r) return res;
    res += descend(kids[r], i, j, trace);
    res += anchor(a + (l + 1) * len - 1, lo, hi, trace);
    if (r > l + 1) {
        if (trace) trace->contained.push_back({a + (l + 1) * len, a + r * len - 1});
        res += power_value(node.symbol, r - l - 1);
        res += anchor(a + r * len - 1, a + (l + 1) * len, hi, trace);
    }
    return res;
}

CountIndex::CountIndex(const TextIndex& forward, const TextIndex& backward, const Rslp& rslp,
                       const InternalDictionary& dict) {
    rslp_ = &rslp;
    anchors_ = AnchorCounter(forward, backward, anchored_patterns(rslp, dict), false);
    reserve_prefixes();

    std::unordered_set<Letter> singles;
    for (Index id = 0; id < dict.size(); ++id) {
        if (dict.length(id) == 1) singles.insert(forward.text()[dict.fragment(id).start]);
    }

    // Children have smaller symbol ids than their parents.
    for (Index s = 0; s < rslp.num_symbols(); ++s) {
        const Rslp::Symbol& sym = rslp.symbol(s);
        if (sym.kind == Rslp::Kind::Terminal) {
            value_[s] = singles.count(sym.letter) ? 1 : 0;
            continue;
        }
        const Index v = sym.representative;
        const Rslp::Node& node = rslp.node(v);
        if (sym.kind == Rslp::Kind::Concat) {
            const Index mid = rslp.node(rslp.children(v)[0]).end;
            value_[s] = value_[sym.left] + value_[sym.right] + anchors_.count(mid, node.start, node.end);
            continue;
        }
        const Index len = rslp.symbol(sym.left).length;
        Count* pre = prefix_.data() + prefix_begin_[s];
        pre[0] = value_[sym.left];
        for (Index k = 2; k <= sym.right; ++k) {
            pre[k - 1] = value_[sym.left] + pre[k - 2] +
                         anchors_.count(node.start + len - 1, node.start, node.start + k * len - 1);
        }
        value_[s] = pre[sym.right - 1];
    }
}

Count CountIndex::count(Index i, Index j, CountTrace* trace) const { return query(i, j, trace); }

WarmupCounter::WarmupCounter(const TextIndex& forward, const TextIndex& backward, const InternalDictionary& dict)
    : n_(forward.size()) {
    std::vector<AnchoredPattern> patterns;
    std::unordered_set<Letter> singles;
    for (Index id = 0; id < dict.size(); ++id) {
        const Fragment f = dict.fragment(id);
        AnchoredPattern p{f, id, {}};
        for (Index b = 1; b < f.length(); ++b) p.breakpoints.push_back(b);
        if (f.length() == 1) singles.insert(forward.text()[f.start]);
        patterns.push_back(std::move(p));
    }
    single_.assign(n_ + 1, 0);
    for (Index pos = 1; pos <= n_; ++pos) single_[pos] = singles.count(forward.text()[pos]) ? 1 : 0;
    anchors_ = AnchorCounter(forward, backward, patterns, false);
    value_.assign(4 * static_cast<std::size_t>(n_) + 4, 0);
    build(1, 1, n_);
}

Count WarmupCounter::build(Index v, Index lo, Index hi) {
    if (lo == hi) return value_[v] = single_[lo];
    const Index mid = lo + (hi - lo) / 2;
    return value_[v] = build(2 * v, lo, mid) + build(2 * v + 1, mid + 1, hi) + anchors_.count(mid, lo, hi);
}

Count WarmupCounter::count(Index i, Index j) const {
    require_range(i, j, n_);
    return descend(1, 1, n_, i, j);
}

Count WarmupCounter::descend(Index v, Index lo, Index hi, Index i, Index j) const {
    if (hi < i || lo > j) return 0;
    if (i <= lo && hi <= j) return value_[v];
    const Index mid = lo + (hi - lo) / 2;
    Count res = descend(2 * v, lo, mid, i, j) + descend(2 * v + 1, mid + 1, hi, i, j);
    if (i <= mid && mid < j) res += anchors_.count(mid, std::max(i, lo), std::min(j, hi));
    return res;
}

}  // namespace idm
