#include "idm/ipm.hpp"

#include <algorithm>

namespace idm {

IpmIndex::IpmIndex(const TextIndex& index) : index_(&index), by_rank_(index.suffix_array()) {
    const SuffixTree& tree = index.tree();
    leftmost_.assign(tree.num_nodes(), kInfinity);
    // Children follow their parent in preorder.
    for (Index v = tree.num_nodes() - 1; v >= 0; --v) {
        if (tree.is_leaf(v)) leftmost_[v] = std::min(leftmost_[v], tree.leaf_position(v));
        if (v != tree.root()) leftmost_[tree.parent(v)] = std::min(leftmost_[tree.parent(v)], leftmost_[v]);
    }
}

IpmIndex::Prepared IpmIndex::prepare(Fragment pattern) const {
    const auto [lo, hi] = index_->sa_interval(pattern);
    return {lo, hi, pattern.length()};
}

Count IpmIndex::count_prepared(const Prepared& p, Index i, Index j) const {
    require_range(i, j, index_->size());
    const Index last = j - p.length + 1;
    if (last < i) return 0;
    return by_rank_.count_range(p.lo, p.hi + 1, i, last);
}

Count IpmIndex::count(Fragment pattern, Index i, Index j) const { return count_prepared(prepare(pattern), i, j); }

void IpmIndex::report(Fragment pattern, Index i, Index j, std::vector<Index>& out) const {
    const Prepared p = prepare(pattern);
    require_range(i, j, index_->size());
    const Index last = j - p.length + 1;
    if (last < i) return;
    by_rank_.report(p.lo, p.hi + 1, i, last, out);
}

Index IpmIndex::leftmost_occurrence(Fragment pattern) const { return leftmost_[index_->locus(pattern).node]; }

}  // namespace idm
