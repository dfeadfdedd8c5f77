#include "idm/suffix_tree.hpp"

#include <bit>

namespace idm {

SuffixTree::SuffixTree(std::span<const Index> sa, std::span<const Index> lcp) {
    const Index total = static_cast<Index>(sa.size());  // n + 1 suffixes

    // Bottom-up construction over LCP intervals; ids here are creation order.
    std::vector<Index> depth{0}, lo{0}, hi{total - 1}, leaf_pos{0};
    std::vector<std::vector<Index>> kids(1);
    auto make = [&](Index d, Index l, Index pos) {
        depth.push_back(d);
        lo.push_back(l);
        hi.push_back(l);
        leaf_pos.push_back(pos);
        kids.emplace_back();
        return static_cast<Index>(depth.size() - 1);
    };

    std::vector<Index> stack{0};
    for (Index r = 0; r <= total; ++r) {
        const Index l = r == total ? 0 : (r == 0 ? 0 : lcp[r]);
        while (depth[stack.back()] > l) {
            const Index x = stack.back();
            stack.pop_back();
            hi[x] = r - 1;
            if (depth[stack.back()] >= l) {
                kids[stack.back()].push_back(x);
            } else {
                const Index v = make(l, lo[x], 0);
                kids[v].push_back(x);
                stack.push_back(v);
            }
        }
        if (r < total) {
            const Index pos = sa[r];
            stack.push_back(make(total - pos + 1, r, pos));
        }
    }

    // Renumber in preorder.
    const Index count = static_cast<Index>(depth.size());
    std::vector<Index> order;
    order.reserve(count);
    std::vector<Index> dfs{0};
    while (!dfs.empty()) {
        const Index v = dfs.back();
        dfs.pop_back();
        order.push_back(v);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) dfs.push_back(*it);
    }
    std::vector<Index> new_id(count);
    for (Index k = 0; k < count; ++k) new_id[order[k]] = k;

    depth_.resize(count);
    parent_.assign(count, 0);
    leaf_position_.resize(count);
    lo_.resize(count);
    hi_.resize(count);
    child_begin_.assign(count + 1, 0);
    child_list_.reserve(count);
    leaf_of_position_.assign(total + 1, 0);
    for (Index k = 0; k < count; ++k) {
        const Index old = order[k];
        depth_[k] = depth[old];
        leaf_position_[k] = leaf_pos[old];
        lo_[k] = lo[old];
        hi_[k] = hi[old];
        if (leaf_pos[old] != 0) leaf_of_position_[leaf_pos[old]] = k;
        child_begin_[k] = static_cast<Index>(child_list_.size());
        for (Index c : kids[old]) {
            child_list_.push_back(new_id[c]);
            parent_[new_id[c]] = k;
        }
    }
    child_begin_[count] = static_cast<Index>(child_list_.size());

    subtree_end_.resize(count);
    for (Index v = count - 1; v >= 0; --v) {
        const auto ch = children(v);
        subtree_end_[v] = ch.empty() ? v : subtree_end_[ch.back()];
    }

    const int levels = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint32_t>(count))));
    up_.assign(levels, std::vector<Index>(count));
    up_[0] = parent_;
    for (int k = 1; k < levels; ++k) {
        for (Index v = 0; v < count; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
    }
}

Index SuffixTree::weighted_ancestor(Index v, Index d) const {
    for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
        const Index u = up_[k][v];
        if (depth_[u] >= d) v = u;
    }
    return v;
}

}  // namespace idm
