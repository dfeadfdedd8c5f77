#include "idm/dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idm {

void DynamicEngine::Delta::add(const Key& k) {
    if (!removed.erase(k)) added.insert(k);
}

void DynamicEngine::Delta::remove(const Key& k) {
    if (!added.erase(k)) removed.insert(k);
}

DynamicEngine::DynamicEngine(const TextContext& context, std::span<const Fragment> initial, Index epoch)
    : context_(&context) {
    for (const Fragment& f : initial) {
        const Key k = key(f);
        if (patterns_.insert(k).second) collections_[k.position].insert(k.length);
    }
    if (epoch <= 0) {
        const double total = static_cast<double>(context.size()) + static_cast<double>(patterns_.size());
        epoch = std::max<Index>(1, static_cast<Index>(std::ceil(std::sqrt(total))));
    }
    epoch_ = epoch;
    rebuild();
    rebuilds_ = 0;
}

DynamicEngine::Key DynamicEngine::key(Fragment f) const {
    if (f.empty()) throw std::invalid_argument("empty pattern fragment");
    return {context_->ipm().leftmost_occurrence(f), f.length()};
}

bool DynamicEngine::insert(Fragment f) {
    const Key k = key(f);
    if (!patterns_.insert(k).second) return false;
    full_delta_.add(k);
    auto& lengths = collections_[k.position];
    if (lengths.empty() || k.length < *lengths.begin()) {
        if (!lengths.empty()) reduced_delta_.remove({k.position, *lengths.begin()});
        reduced_delta_.add(k);
    }
    lengths.insert(k.length);
    count_update();
    return true;
}

void DynamicEngine::erase(Fragment f) {
    const Key k = key(f);
    if (!patterns_.erase(k)) {
        throw std::invalid_argument("pattern [" + std::to_string(f.start) + ".." + std::to_string(f.end) +
                                    "] is not in the dictionary");
    }
    full_delta_.remove(k);
    auto it = collections_.find(k.position);
    auto& lengths = it->second;
    const bool was_min = *lengths.begin() == k.length;
    lengths.erase(k.length);
    if (was_min) {
        reduced_delta_.remove(k);
        if (!lengths.empty()) reduced_delta_.add({k.position, *lengths.begin()});
    }
    if (lengths.empty()) collections_.erase(it);
    count_update();
}

void DynamicEngine::count_update() {
    if (++pending_ >= epoch_) rebuild();
}

std::vector<DynamicEngine::Key> DynamicEngine::reduced() const {
    std::vector<Key> out;
    for (const auto& [p, lengths] : collections_) out.push_back({p, *lengths.begin()});
    return out;
}

void DynamicEngine::rebuild() {
    Epoch next;
    next.full_keys = patterns();
    next.reduced_keys = reduced();
    auto fragments = [](const std::vector<Key>& keys) {
        std::vector<Fragment> out;
        out.reserve(keys.size());
        for (const Key& k : keys) out.push_back(k.fragment());
        return out;
    };
    EngineOptions count_only{false, false, true, false};
    EngineOptions distinct_and_count{false, true, true, false};
    next.full = std::make_unique<StaticEngine>(*context_, fragments(next.full_keys), count_only);
    next.reduced = std::make_unique<StaticEngine>(*context_, fragments(next.reduced_keys), distinct_and_count);
    base_ = std::move(next);
    full_delta_ = {};
    reduced_delta_ = {};
    pending_ = 0;
    ++rebuilds_;
}

Count DynamicEngine::adjusted(const StaticEngine& base, const Delta& delta, Index i, Index j) const {
    Count total = base.count(i, j);
    const IpmIndex& ipm = context_->ipm();
    for (const Key& k : delta.removed) total -= ipm.count(k.fragment(), i, j);
    for (const Key& k : delta.added) total += ipm.count(k.fragment(), i, j);
    return total;
}

bool DynamicEngine::exists(Index i, Index j) const {
    require_range(i, j, context_->size());
    return adjusted(*base_.reduced, reduced_delta_, i, j) > 0;
}

Count DynamicEngine::count(Index i, Index j) const {
    require_range(i, j, context_->size());
    return adjusted(*base_.full, full_delta_, i, j);
}

void DynamicEngine::report_distinct(Index i, Index j, std::vector<Key>& out) const {
    require_range(i, j, context_->size());
    const IpmIndex& ipm = context_->ipm();
    std::vector<Index> ids;
    base_.reduced->report_distinct(i, j, ids);
    std::vector<Key> heads;
    for (Index id : ids) {
        const Key& k = base_.reduced_keys[id];
        if (!reduced_delta_.removed.count(k)) heads.push_back(k);
    }
    for (const Key& k : reduced_delta_.added) {
        if (ipm.exists(k.fragment(), i, j)) heads.push_back(k);
    }
    // Longer members of a collection extend its shortest one.
    const auto from = out.size();
    for (const Key& head : heads) {
        for (Index len : collections_.at(head.position)) {
            const Key k{head.position, len};
            if (!ipm.exists(k.fragment(), i, j)) break;
            out.push_back(k);
        }
    }
    std::sort(out.begin() + from, out.end());
}

void DynamicEngine::report(Index i, Index j, std::vector<KeyedOccurrence>& out) const {
    std::vector<Key> keys;
    report_distinct(i, j, keys);
    const auto from = out.size();
    std::vector<Index> starts;
    for (const Key& k : keys) {
        starts.clear();
        context_->ipm().report(k.fragment(), i, j, starts);
        for (Index s : starts) out.push_back({k, s});
    }
    std::sort(out.begin() + from, out.end(), [](const KeyedOccurrence& a, const KeyedOccurrence& b) {
        return a.start != b.start ? a.start < b.start : a.pattern.length < b.pattern.length;
    });
}

}  // namespace idm
