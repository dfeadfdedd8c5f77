#include "idm/recompression.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace idm {

namespace {

std::uint64_t pair_key(Index a, Index b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Index ceil_log2(Index x) { return x <= 1 ? 0 : static_cast<Index>(std::bit_width(static_cast<std::uint32_t>(x - 1))); }

Rslp::Rslp(const Text& text) : n_(text.size()) {
    std::vector<Letter> letters(text.letters().begin(), text.letters().end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (Letter c : letters) symbols_.push_back({Kind::Terminal, c, kNone, kNone, 1, kNone});

    nodes_.reserve(2 * static_cast<std::size_t>(n_));
    std::vector<Index> seq(n_);
    for (Index pos = 1; pos <= n_; ++pos) {
        const Index a = static_cast<Index>(std::lower_bound(letters.begin(), letters.end(), text[pos]) - letters.begin());
        nodes_.push_back({a, pos, pos, 0, 0});
        seq[pos - 1] = pos - 1;
    }

    std::unordered_map<std::uint64_t, Index> concat_ids, power_ids;
    auto make_node = [&](Index sym, std::span<const Index> kids) {
        Node v{sym, nodes_[kids.front()].start, nodes_[kids.back()].end, static_cast<Index>(children_.size()),
               static_cast<Index>(kids.size())};
        children_.insert(children_.end(), kids.begin(), kids.end());
        nodes_.push_back(v);
        return static_cast<Index>(nodes_.size() - 1);
    };
    auto symbol_for = [&](std::unordered_map<std::uint64_t, Index>& ids, Kind kind, Index b, Index c, Index length) {
        const auto [it, fresh] = ids.try_emplace(pair_key(b, c), num_symbols());
        if (fresh) symbols_.push_back({kind, 0, b, c, length, kNone});
        return it->second;
    };

    std::vector<char> side;  // per symbol, 1 = R
    std::vector<std::uint64_t> edges;
    bool block_next = true;
    while (seq.size() > 1) {
        const Index m = static_cast<Index>(seq.size());
        auto sym = [&](Index k) { return nodes_[seq[k]].symbol; };
        Level lv;
        lv.is_block = block_next;
        std::vector<Index> next;
        lv.up.resize(m);

        if (block_next) {
            block_next = false;
            bool any = false;
            for (Index k = 0; k + 1 < m && !any; ++k) any = sym(k) == sym(k + 1);
            if (!any) continue;
            lv.block_start.resize(m);
            lv.block_end.resize(m);
            for (Index k = 0; k < m;) {
                Index e = k;
                while (e + 1 < m && sym(e + 1) == sym(k)) ++e;
                for (Index x = k; x <= e; ++x) {
                    lv.block_start[x] = k;
                    lv.block_end[x] = e;
                    lv.up[x] = static_cast<Index>(next.size());
                }
                const Index count = e - k + 1;
                if (count == 1) {
                    next.push_back(seq[k]);
                } else {
                    const Index a = symbol_for(power_ids, Kind::Power, sym(k), count, symbols_[sym(k)].length * count);
                    next.push_back(make_node(a, std::span<const Index>(seq.data() + k, count)));
                }
                k = e + 1;
            }
        } else {
            block_next = true;
            // greedy max-cut over adjacent pairs, symbols in increasing id
            edges.clear();
            for (Index k = 0; k + 1 < m; ++k) {
                const Index x = sym(k), y = sym(k + 1);
                edges.push_back(pair_key(std::max(x, y), std::min(x, y)));
            }
            std::sort(edges.begin(), edges.end());
            side.assign(symbols_.size(), 0);
            for (std::size_t e = 0; e < edges.size();) {
                const Index hi = static_cast<Index>(edges[e] >> 32);
                Count to_left = 0, to_right = 0;
                for (; e < edges.size() && static_cast<Index>(edges[e] >> 32) == hi; ++e) {
                    const Index lo = static_cast<Index>(edges[e] & 0xffffffffu);
                    (side[lo] ? to_right : to_left) += 1;
                }
                side[hi] = to_left >= to_right ? 1 : 0;
            }
            Count lr = 0, rl = 0;
            for (Index k = 0; k + 1 < m; ++k) {
                lr += !side[sym(k)] && side[sym(k + 1)];
                rl += side[sym(k)] && !side[sym(k + 1)];
            }
            if (rl > lr) {
                for (auto& s : side) s = !s;
            }
            lv.right.resize(m);
            for (Index k = 0; k < m; ++k) lv.right[k] = side[sym(k)];
            for (Index k = 0; k < m;) {
                if (k + 1 < m && !lv.right[k] && lv.right[k + 1]) {
                    const Index b = sym(k), c = sym(k + 1);
                    const Index a = symbol_for(concat_ids, Kind::Concat, b, c, symbols_[b].length + symbols_[c].length);
                    lv.up[k] = lv.up[k + 1] = static_cast<Index>(next.size());
                    next.push_back(make_node(a, std::span<const Index>(seq.data() + k, 2)));
                    k += 2;
                } else {
                    lv.up[k] = static_cast<Index>(next.size());
                    next.push_back(seq[k]);
                    ++k;
                }
            }
        }
        lv.nodes = std::move(seq);
        levels_.push_back(std::move(lv));
        seq = std::move(next);
    }
    root_ = seq.front();

    for (Index v = 0; v < num_nodes(); ++v) {
        Index& rep = symbols_[nodes_[v].symbol].representative;
        if (rep == kNone || nodes_[v].start < nodes_[rep].start) rep = v;
    }
    // children are created before parents, so depths fill in one backward pass
    std::vector<Index> depth(num_nodes(), 0);
    parent_.assign(num_nodes(), kNone);
    for (Index v = num_nodes() - 1; v >= 0; --v) {
        for (Index c : children(v)) {
            depth[c] = depth[v] + 1;
            parent_[c] = v;
        }
        depth_ = std::max(depth_, depth[v]);
    }
}

std::vector<Letter> Rslp::expand(Index a) const {
    std::vector<Letter> out;
    std::vector<Index> todo{a};
    while (!todo.empty()) {
        const Index x = todo.back();
        todo.pop_back();
        const Symbol& s = symbols_[x];
        switch (s.kind) {
            case Kind::Terminal:
                out.push_back(s.letter);
                break;
            case Kind::Concat:
                todo.push_back(s.right);
                todo.push_back(s.left);
                break;
            case Kind::Power:
                for (Index k = 0; k < s.right; ++k) todo.push_back(s.left);
                break;
        }
    }
    return out;
}

std::vector<Index> Rslp::popped_nodes(Fragment f) const {
    std::vector<Index> left, right;
    std::size_t h = 0;
    Index lo = f.start - 1, hi = f.end - 1;
    bool popped = false;
    while (lo <= hi) {
        if (lo == hi) {
            left.push_back(node_at(h, lo));
            break;
        }
        const Level& lv = levels_[h];
        if (lv.is_block) {
            const Index first_end = std::min(hi, lv.block_end[lo]);
            for (Index k = lo; k <= first_end; ++k) left.push_back(lv.nodes[k]);
            lo = first_end + 1;
            if (lo <= hi) {
                const Index last_start = std::max(lo, lv.block_start[hi]);
                for (Index k = hi; k >= last_start; --k) right.push_back(lv.nodes[k]);
                hi = last_start - 1;
            }
            popped = true;
        } else {
            if (!popped && hi == lo + 1 && !lv.right[lo] && lv.right[hi]) {
                left.push_back(lv.nodes[lo]);
                left.push_back(lv.nodes[hi]);
                break;
            }
            if (lv.right[lo]) {
                left.push_back(lv.nodes[lo++]);
                popped = true;
            }
            if (lo <= hi && !lv.right[hi]) {
                right.push_back(lv.nodes[hi--]);
                popped = true;
            }
        }
        if (lo > hi) break;
        lo = lv.up[lo];
        hi = lv.up[hi];
        ++h;
    }
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

std::vector<Rslp::SymbolRun> Rslp::popped_sequence(Fragment f) const {
    std::vector<SymbolRun> out;
    for (Index v : popped_nodes(f)) {
        const Index a = nodes_[v].symbol;
        if (!out.empty() && out.back().symbol == a) {
            ++out.back().power;
        } else {
            out.push_back({a, 1});
        }
    }
    return out;
}

std::vector<Index> Rslp::landmarks(Fragment f) const {
    const auto runs = popped_sequence(f);
    std::vector<Index> out{symbols_[runs.front().symbol].length};
    Index prefix = 0;
    // the prefix after the first run is listed even when it is the only run
    for (std::size_t r = 0; r < std::max<std::size_t>(1, runs.size() - 1); ++r) {
        prefix += symbols_[runs[r].symbol].length * runs[r].power;
        out.push_back(prefix);
    }
    out.push_back(f.length() - symbols_[runs.back().symbol].length);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Index> Rslp::breakpoints(Fragment f) const {
    auto out = landmarks(f);
    std::erase_if(out, [&](Index b) { return b < 1 || b > f.length() - 1; });
    return out;
}

std::string Rslp::dump(bool bytes_as_chars) const {
    std::string out;
    auto name = [](Index a) { return "X" + std::to_string(a); };
    for (Index a = 0; a < num_symbols(); ++a) {
        const Symbol& s = symbols_[a];
        out += name(a) + " -> ";
        switch (s.kind) {
            case Kind::Terminal:
                if (bytes_as_chars && s.letter >= 32 && s.letter < 127) {
                    out += '\'';
                    out += static_cast<char>(s.letter);
                    out += '\'';
                } else {
                    out += "'" + std::to_string(s.letter) + "'";
                }
                break;
            case Kind::Concat:
                out += name(s.left) + " " + name(s.right);
                break;
            case Kind::Power:
                out += name(s.left) + "^" + std::to_string(s.right);
                break;
        }
        out += '\n';
    }
    return out;
}

}  // namespace idm
