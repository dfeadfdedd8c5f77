#include "idm/text_index.hpp"

#include <stdexcept>
#include <string>

#include "idm/suffix_array.hpp"

namespace idm {

TextIndex::TextIndex(Text text, bool with_runs) : text_(std::move(text)) {
    if (text_.size() == 0) throw std::invalid_argument("text must be non-empty");
    sa_ = build_suffix_array(text_.letters());
    lcp_ = build_lcp_array(text_.letters(), sa_);
    lce_ = Lce(sa_, lcp_);
    tree_ = SuffixTree(sa_, lcp_);
    rank_open_.resize(tree_.num_nodes());
    rank_close_.resize(tree_.num_nodes());
    std::int64_t cr = 0;
    // (node, entering?) pairs; children pushed right-to-left
    std::vector<std::pair<Index, bool>> dfs{{0, true}};
    while (!dfs.empty()) {
        const auto [v, entering] = dfs.back();
        dfs.pop_back();
        if (entering) {
            if (v != 0) cr += tree_.depth(v) - tree_.depth(tree_.parent(v));
            rank_open_[v] = cr;
            if (tree_.is_leaf(v)) ++cr;
            dfs.push_back({v, false});
            const auto ch = tree_.children(v);
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) dfs.push_back({*it, true});
        } else {
            rank_close_[v] = cr;
            if (v != 0) cr += tree_.depth(v) - tree_.depth(tree_.parent(v));
        }
    }
    if (with_runs) {
        const Text rev = text_.reversed();
        const auto rev_sa = build_suffix_array(rev.letters());
        const auto rev_lcp = build_lcp_array(rev.letters(), rev_sa);
        const Lce backward(rev_sa, rev_lcp);
        run_index_ = RunIndex(compute_runs(text_.letters(), lce_, backward));
    }
}

Index TextIndex::lce(Index a, Index b) const {
    if (a < 1 || b < 1 || a > size() || b > size()) {
        throw std::out_of_range("lce positions " + std::to_string(a) + ", " + std::to_string(b) +
                                " out of range for text of length " + std::to_string(size()));
    }
    return lce_(a, b);
}

Locus TextIndex::locus(Fragment f) const {
    text_.require_fragment(f);
    return {tree_.weighted_ancestor(tree_.leaf(f.start), f.length()), f.length()};
}

std::pair<Index, Index> TextIndex::sa_interval(Fragment f) const {
    const Locus l = locus(f);
    return {tree_.lo(l.node), tree_.hi(l.node)};
}

std::optional<Index> TextIndex::two_period(Fragment f) const {
    text_.require_fragment(f);
    return run_index_.two_period(f);
}

std::optional<Run> TextIndex::periodic_extension(Fragment f) const {
    text_.require_fragment(f);
    return run_index_.periodic_extension(f);
}

}  // namespace idm
