#include "idm/dictionary.hpp"

#include <stdexcept>
#include <string>

namespace idm {

InternalDictionary::InternalDictionary(const TextIndex& index, std::span<const Fragment> fragments) {
    for (const Fragment& f : fragments) {
        if (f.empty()) {
            throw std::invalid_argument("empty pattern [" + std::to_string(f.start) + ".." + std::to_string(f.end) + "]");
        }
        const Locus l = index.locus(f);
        const auto [it, fresh] = by_locus_.try_emplace(key(l), size());
        if (fresh) {
            fragments_.push_back(f);
            loci_.push_back(l);
        }
        input_ids_.push_back(it->second);
    }
}

Index InternalDictionary::find(const TextIndex& index, Fragment f) const {
    const auto it = by_locus_.find(key(index.locus(f)));
    return it == by_locus_.end() ? kNone : it->second;
}

std::vector<ModifiedSuffixTree::Mark> InternalDictionary::marks(std::span<const Index> ids) const {
    std::vector<ModifiedSuffixTree::Mark> out;
    out.reserve(ids.size());
    for (Index id : ids) out.push_back({loci_[id], id});
    return out;
}

std::vector<ModifiedSuffixTree::Mark> InternalDictionary::marks() const {
    std::vector<ModifiedSuffixTree::Mark> out;
    out.reserve(fragments_.size());
    for (Index id = 0; id < size(); ++id) out.push_back({loci_[id], id});
    return out;
}

OccurrenceIndex::OccurrenceIndex(ModifiedSuffixTree tree, Index n) : tree_(std::move(tree)) {
    std::vector<Index> b(n);
    for (Index a = 1; a <= n; ++a) {
        const Index u = tree_.leaf_parent(a);
        b[a - 1] = u == 0 ? kInfinity : a + tree_.depth(tree_.top(u)) - 1;
    }
    b_ = RangeMin<Index>(std::move(b));
}

void OccurrenceIndex::starts(Index i, Index j, std::vector<Index>& out) const {
    std::vector<std::pair<Index, Index>> todo{{i, j}};
    while (!todo.empty()) {
        const auto [l, r] = todo.back();
        todo.pop_back();
        const Index m = b_.argmin(l - 1, r - 1) + 1;
        if (b_[m - 1] > j) continue;
        out.push_back(m);
        if (l < m) todo.push_back({l, m - 1});
        if (m < r) todo.push_back({m + 1, r});
    }
}

void OccurrenceIndex::report(Index i, Index j, std::vector<Occurrence>& out) const {
    std::vector<Index> positions;
    starts(i, j, positions);
    std::vector<Index> ids;
    for (Index a : positions) {
        ids.clear();
        tree_.patterns_at(a, j - a + 1, ids);
        for (Index id : ids) out.push_back({id, a});
    }
}

}  // namespace idm
