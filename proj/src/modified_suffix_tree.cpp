#include "idm/modified_suffix_tree.hpp"

#include <algorithm>
#include <bit>

namespace idm {

ModifiedSuffixTree::ModifiedSuffixTree(const TextIndex& index, std::vector<Mark> marks) {
    const SuffixTree& st = index.tree();
    const Index n = index.size();

    std::stable_sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) {
        return std::pair(a.locus.node, a.locus.length) < std::pair(b.locus.node, b.locus.length);
    });
    marks.erase(std::unique(marks.begin(), marks.end(),
                            [](const Mark& a, const Mark& b) {
                                return a.locus.node == b.locus.node && a.locus.length == b.locus.length;
                            }),
                marks.end());
    // marks at ST node v: [mark_begin[v], mark_begin[v+1])
    std::vector<Index> mark_begin(st.num_nodes() + 1, 0);
    for (const Mark& m : marks) ++mark_begin[m.locus.node + 1];
    for (Index v = 0; v < st.num_nodes(); ++v) mark_begin[v + 1] += mark_begin[v];

    parent_.push_back(0);
    level_.push_back(0);
    top_.push_back(0);
    pattern_.push_back(kNone);
    locus_.push_back({0, 0});
    leaf_parent_.assign(n + 2, 0);

    std::vector<Index> path{0};  // DMST nodes on the current root-to-node path
    std::vector<std::pair<Index, bool>> dfs{{0, true}};
    while (!dfs.empty()) {
        const auto [v, entering] = dfs.back();
        dfs.pop_back();
        const Index count = mark_begin[v + 1] - mark_begin[v];
        if (!entering) {
            path.resize(path.size() - count);
            continue;
        }
        for (Index k = mark_begin[v]; k < mark_begin[v + 1]; ++k) {
            const Index u = num_nodes();
            const Index p = path.back();
            parent_.push_back(p);
            level_.push_back(level_[p] + 1);
            top_.push_back(p == 0 ? u : top_[p]);
            pattern_.push_back(marks[k].pattern);
            locus_.push_back(marks[k].locus);
            path.push_back(u);
        }
        if (st.is_leaf(v)) {
            leaf_parent_[st.leaf_position(v)] = path.back();
            path.resize(path.size() - count);
            continue;
        }
        dfs.push_back({v, false});
        const auto ch = st.children(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) dfs.push_back({*it, true});
    }

    const Index total = num_nodes();
    subtree_end_.resize(total);
    for (Index u = 0; u < total; ++u) subtree_end_[u] = u;
    for (Index u = total - 1; u > 0; --u) subtree_end_[parent_[u]] = std::max(subtree_end_[parent_[u]], subtree_end_[u]);

    const int levels = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint32_t>(total))));
    up_.assign(levels, parent_);
    for (int k = 1; k < levels; ++k) {
        for (Index u = 0; u < total; ++u) up_[k][u] = up_[k - 1][up_[k - 1][u]];
    }

    for (Index u = 1; u < total; ++u) by_pattern_.push_back({pattern_[u], u});
    std::sort(by_pattern_.begin(), by_pattern_.end());
}

Index ModifiedSuffixTree::deepest_prefix(Index pos, Index max_len) const {
    Index u = leaf_parent_[pos];
    if (depth(u) <= max_len) return u;
    for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
        const Index w = up_[k][u];
        if (depth(w) > max_len) u = w;
    }
    return parent_[u];
}

void ModifiedSuffixTree::patterns_at(Index pos, Index max_len, std::vector<Index>& out) const {
    const std::size_t first = out.size();
    for (Index u = deepest_prefix(pos, max_len); u != 0; u = parent_[u]) out.push_back(pattern_[u]);
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

Index ModifiedSuffixTree::lca(Index u, Index v) const {
    if (is_ancestor(u, v)) return u;
    if (is_ancestor(v, u)) return v;
    for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
        const Index w = up_[k][u];
        if (!is_ancestor(w, v)) u = w;
    }
    return parent_[u];
}

Index ModifiedSuffixTree::node_of_pattern(Index pattern) const {
    const auto it = std::lower_bound(by_pattern_.begin(), by_pattern_.end(), std::pair(pattern, Index{0}));
    if (it == by_pattern_.end() || it->first != pattern) return kNone;
    return it->second;
}

}  // namespace idm
