#include "idm/count_distinct.hpp"

#include <algorithm>

namespace idm {

namespace {

// Distinct patterns occurring in T[a..b] that start in [a..last]: the union of
// root paths of the deepest pattern prefix at each start, summed over the
// nodes in preorder with LCA(previous, current) removed.
Count distinct_patterns(const ModifiedSuffixTree& tree, Index a, Index last, Index b, std::vector<Index>& scratch) {
    scratch.clear();
    for (Index p = a; p <= last; ++p) {
        const Index u = tree.deepest_prefix(p, b - p + 1);
        if (u != tree.root()) scratch.push_back(u);
    }
    std::sort(scratch.begin(), scratch.end());
    Count total = 0;
    Index prev = tree.root();
    for (Index u : scratch) {
        total += tree.level(u) - tree.level(tree.lca(prev, u));
        prev = u;
    }
    return total;
}

}  // namespace

DistinctCountIndex::DistinctCountIndex(const TextIndex& forward, const TextIndex& backward, const Rslp& rslp,
                                       const InternalDictionary& dict) {
    rslp_ = &rslp;
    anchors_ = AnchorCounter(forward, backward, anchored_patterns(rslp, dict), true);
    reserve_prefixes();

    const ModifiedSuffixTree tree(forward, dict.marks());
    std::vector<Index> scratch;
    for (Index s = 0; s < rslp.num_symbols(); ++s) {
        const Rslp::Symbol& sym = rslp.symbol(s);
        const Rslp::Node& node = rslp.node(sym.representative);
        value_[s] = distinct_patterns(tree, node.start, node.end, node.end, scratch);
        if (sym.kind != Rslp::Kind::Power) continue;
        // Anything in g(B^i) also occurs starting within the first |g(B)| positions.
        const Index len = rslp.symbol(sym.left).length;
        Count* pre = prefix_.data() + prefix_begin_[s];
        for (Index k = 1; k <= sym.right; ++k) {
            pre[k - 1] = distinct_patterns(tree, node.start, node.start + len - 1, node.start + k * len - 1, scratch);
        }
    }
}

DistinctEstimate DistinctCountIndex::count_distinct(Index i, Index j, CountTrace* trace) const {
    CountTrace local;
    CountTrace& t = trace ? *trace : local;
    t.contained.clear();
    t.anchors.clear();
    DistinctEstimate out;
    out.value = query(i, j, &t);
    out.contained_nodes = static_cast<Index>(t.contained.size());
    out.anchor_queries = static_cast<Index>(t.anchors.size());
    return out;
}

}  // namespace idm
