#pragma once

#include <vector>

#include "idm/anchor_counter.hpp"
#include "idm/dictionary.hpp"
#include "idm/recompression.hpp"
#include "idm/text_index.hpp"

namespace idm {

/// What a parse-tree descent added up: ranges whose stored values were used
/// and the anchor queries issued.
struct CountTrace {
    struct Anchor {
        Index x, i, j;  // anchor x + 1/2 over window [i..j]
    };
    std::vector<Fragment> contained;
    std::vector<Anchor> anchors;
};

/// Each pattern with its interior breakpoints in the parse tree.
std::vector<AnchoredPattern> anchored_patterns(const Rslp& rslp, const InternalDictionary& dict);

/*
 * Query side shared by exact and approximate counting. Every symbol stores a
 * value for g(A) and every power A -> B^k stores values for g(B^i). A query
 * descends from the root, takes stored values of contained nodes and asks
 * the anchor counter at the child boundaries it cuts.
 *
 * The Rslp must outlive the index.
 */
class ParseTreeCounter {
public:
    Count symbol_value(Index a) const { return value_[a]; }
    /// Stored value of g(B^i) for a power symbol a, 1 <= i <= exponent.
    Count power_value(Index a, Index i) const { return prefix_[prefix_begin_[a] + i - 1]; }
    const AnchorCounter& anchors() const { return anchors_; }

protected:
    ParseTreeCounter() = default;
    Count query(Index i, Index j, CountTrace* trace) const;
    void reserve_prefixes();

    const Rslp* rslp_ = nullptr;
    AnchorCounter anchors_;
    std::vector<Count> value_;
    std::vector<Index> prefix_begin_;
    std::vector<Count> prefix_;

private:
    Count descend(Index v, Index i, Index j, CountTrace* trace) const;
    Count anchor(Index x, Index i, Index j, CountTrace* trace) const;
};

/// Exact Count(i, j): occurrences of all patterns inside T[i..j].
class CountIndex : public ParseTreeCounter {
public:
    CountIndex() = default;
    CountIndex(const TextIndex& forward, const TextIndex& backward, const Rslp& rslp, const InternalDictionary& dict);

    Count count(Index i, Index j, CountTrace* trace = nullptr) const;
    /// Occurrences crossing x + 1/2 at one of their breakpoints inside [i..j].
    Count anchor_count(Index x, Index i, Index j) const { return anchors_.count(x, i, j); }
};

/*
 * Reference counter over a balanced binary tree of the text with every
 * split of every pattern as a breakpoint. Space grows with the total
 * pattern length, so it is meant for tests.
 */
class WarmupCounter {
public:
    WarmupCounter() = default;
    WarmupCounter(const TextIndex& forward, const TextIndex& backward, const InternalDictionary& dict);

    Count count(Index i, Index j) const;

private:
    Count build(Index v, Index lo, Index hi);
    Count descend(Index v, Index lo, Index hi, Index i, Index j) const;

    Index n_ = 0;
    std::vector<char> single_;  // per position: T[pos] is a pattern
    AnchorCounter anchors_;
    std::vector<Count> value_;
};

}  // namespace idm
