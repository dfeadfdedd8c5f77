#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "idm/runs.hpp"
#include "idm/text.hpp"
#include "idm/types.hpp"

// Brute-force reference answers. Nothing here uses the index structures.
namespace idm::oracle {

/// Patterns by content; ids follow first appearance in the fragment list.
class Dictionary {
public:
    Dictionary() = default;
    Dictionary(const Text& text, std::span<const Fragment> fragments);

    Index size() const { return static_cast<Index>(patterns_.size()); }
    const std::vector<Letter>& pattern(Index id) const { return patterns_[id]; }
    Index length(Index id) const { return static_cast<Index>(patterns_[id].size()); }

private:
    std::vector<std::vector<Letter>> patterns_;
};

struct Answer {
    bool exists = false;
    std::vector<Occurrence> occurrences;  // sorted by (start, pattern)
    std::vector<Index> distinct;          // sorted ids
    Count count = 0;
    Count distinct_count = 0;
};

bool occurs_at(const Text& text, std::span<const Letter> pattern, Index pos);

Answer answer(const Text& text, const Dictionary& dict, Index i, Index j);

/// by_end[e] = occurrences (pattern, start) in the whole text ending at e.
std::vector<std::vector<Occurrence>> occurrences_by_end(const Text& text, const Dictionary& dict);

Index lce(const Text& text, Index a, Index b);
Index smallest_period(std::span<const Letter> s);
/// Quadratic scan over fragments with a per-start failure function.
std::vector<Run> runs(const Text& text);

struct Instance {
    Text text;
    std::vector<Fragment> fragments;
};

/// Reproducible instance; alphabet letters are 'a', 'b', ... . Fragments lean
/// towards short, periodic and nested patterns.
Instance random_instance(std::uint64_t seed, Index n, Index alphabet, Index d);

}  // namespace idm::oracle
