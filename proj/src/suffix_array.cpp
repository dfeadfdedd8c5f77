#include "idm/suffix_array.hpp"

#include <algorithm>

namespace idm {

std::vector<Index> build_suffix_array(std::span<const Letter> text) {
    const Index n = static_cast<Index>(text.size());
    const Index total = n + 1;  // including the sentinel suffix

    // Letter ranks in 1..sigma, sentinel 0.
    std::vector<Letter> alphabet(text.begin(), text.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::vector<Index> rank(total), sa(total), tmp(total), next_rank(total);
    for (Index i = 0; i < n; ++i) {
        rank[i] = static_cast<Index>(std::lower_bound(alphabet.begin(), alphabet.end(), text[i]) - alphabet.begin()) + 1;
    }
    rank[n] = 0;

    Index classes = static_cast<Index>(alphabet.size()) + 1;
    std::vector<Index> bucket(std::max<Index>(classes, total) + 1);

    auto counting_sort = [&](const std::vector<Index>& order) {
        std::fill(bucket.begin(), bucket.begin() + classes + 1, 0);
        for (Index i : order) ++bucket[rank[i] + 1];
        for (Index c = 1; c <= classes; ++c) bucket[c] += bucket[c - 1];
        for (Index i : order) sa[bucket[rank[i]]++] = i;
    };

    for (Index i = 0; i < total; ++i) tmp[i] = i;
    counting_sort(tmp);

    for (Index k = 1; classes < total; k <<= 1) {
        // Order by the second key (rank[i + k], missing = smallest), then stable sort by the first.
        Index p = 0;
        for (Index i = total - k; i < total; ++i) tmp[p++] = i;
        for (Index r = 0; r < total; ++r) {
            if (sa[r] >= k) tmp[p++] = sa[r] - k;
        }
        counting_sort(tmp);

        next_rank[sa[0]] = 0;
        Index c = 0;
        for (Index r = 1; r < total; ++r) {
            const Index a = sa[r - 1], b = sa[r];
            const Index a2 = a + k < total ? rank[a + k] : -1;
            const Index b2 = b + k < total ? rank[b + k] : -1;
            if (rank[a] != rank[b] || a2 != b2) ++c;
            next_rank[b] = c;
        }
        std::swap(rank, next_rank);
        classes = c + 1;
    }

    std::vector<Index> result(total);
    for (Index r = 0; r < total; ++r) result[r] = sa[r] + 1;
    return result;
}

std::vector<Index> invert_suffix_array(std::span<const Index> sa) {
    std::vector<Index> rank(sa.size() + 1, 0);
    for (Index r = 0; r < static_cast<Index>(sa.size()); ++r) rank[sa[r]] = r;
    return rank;
}

std::vector<Index> build_lcp_array(std::span<const Letter> text, std::span<const Index> sa) {
    const Index n = static_cast<Index>(text.size());
    const Index total = n + 1;
    const auto rank = invert_suffix_array(sa);
    std::vector<Index> lcp(total, 0);
    Index h = 0;
    for (Index pos = 1; pos <= total; ++pos) {
        const Index r = rank[pos];
        if (r == 0) {
            h = 0;
            continue;
        }
        const Index other = sa[r - 1];
        while (pos + h <= n && other + h <= n && text[pos + h - 1] == text[other + h - 1]) ++h;
        lcp[r] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace idm
