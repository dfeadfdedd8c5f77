#pragma once

#include <span>
#include <vector>

#include "idm/types.hpp"

namespace idm {

/// Suffix array of T$ where $ is smaller than every letter. Entries are
/// 1-based starting positions; the sentinel suffix is position n+1 and is
/// always at rank 0. Prefix doubling with radix sort, O(n log n).
std::vector<Index> build_suffix_array(std::span<const Letter> text);

/// lcp[r] = LCP of suffixes sa[r-1] and sa[r]; lcp[0] = 0 (Kasai et al.).
std::vector<Index> build_lcp_array(std::span<const Letter> text, std::span<const Index> sa);

/// rank[pos] for pos in 1..n+1; rank[0] is unused.
std::vector<Index> invert_suffix_array(std::span<const Index> sa);

}  // namespace idm
