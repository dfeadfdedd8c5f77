#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "idm/engine.hpp"

namespace idm {

/*
 * Dictionary under insertions and deletions. A pattern is identified by
 * (leftmost occurrence p, length) and belongs to collection D[p]; the
 * reduced dictionary D' holds the shortest pattern of every collection.
 *
 * Static structures are rebuilt every `epoch` effective updates: counting
 * over D, and ReportDistinct plus counting over D'. In between, queries
 * correct the static answers with internal pattern matching on the patterns
 * added or removed since the last rebuild.
 */
class DynamicEngine {
public:
    struct Key {
        Index position = 0;  // leftmost occurrence
        Index length = 0;
        Fragment fragment() const { return {position, position + length - 1}; }
        friend constexpr auto operator<=>(const Key&, const Key&) = default;
    };
    struct KeyedOccurrence {
        Key pattern;
        Index start = 0;
    };

    /// epoch <= 0 selects ceil(sqrt(n + d)).
    DynamicEngine(const TextContext& context, std::span<const Fragment> initial, Index epoch = 0);

    Key key(Fragment f) const;

    /// Returns false if the pattern was already present (nothing changes).
    bool insert(Fragment f);
    /// Throws std::invalid_argument if the pattern is absent.
    void erase(Fragment f);
    void rebuild();

    bool exists(Index i, Index j) const;
    /// Sorted by (start, length).
    void report(Index i, Index j, std::vector<KeyedOccurrence>& out) const;
    /// Sorted keys.
    void report_distinct(Index i, Index j, std::vector<Key>& out) const;
    Count count(Index i, Index j) const;

    Index epoch() const { return epoch_; }
    Index rebuilds() const { return rebuilds_; }
    Index pending_updates() const { return pending_; }
    Index size() const { return static_cast<Index>(patterns_.size()); }
    /// Current dictionary, sorted.
    std::vector<Key> patterns() const { return {patterns_.begin(), patterns_.end()}; }
    /// Current D', sorted.
    std::vector<Key> reduced() const;
    const std::map<Index, std::set<Index>>& collections() const { return collections_; }

private:
    struct Delta {
        std::set<Key> added, removed;
        void add(const Key& k);
        void remove(const Key& k);
    };
    struct Epoch {
        std::vector<Key> full_keys, reduced_keys;  // index = pattern id
        std::unique_ptr<StaticEngine> full, reduced;
    };

    void count_update();
    Count adjusted(const StaticEngine& base, const Delta& delta, Index i, Index j) const;

    const TextContext* context_;
    Index epoch_ = 1;
    Index rebuilds_ = 0;
    Index pending_ = 0;
    std::set<Key> patterns_;
    std::map<Index, std::set<Index>> collections_;  // p -> lengths
    Delta full_delta_, reduced_delta_;
    Epoch base_;
};

}  // namespace idm
