#pragma once

#include <cstdint>
#include <vector>

#include "idm/dictionary.hpp"
#include "idm/geometry.hpp"
#include "idm/runs.hpp"
#include "idm/text_index.hpp"

namespace idm {

/// Per-pattern stamps so that each query deduplicates without clearing.
struct DistinctScratch {
    std::vector<std::uint64_t> stamps;
    std::uint64_t query = 0;
};

/// Emissions before deduplication, as (layer, pattern) pairs.
struct DistinctTrace {
    std::vector<std::pair<Index, Index>> emissions;
};

/*
 * ReportDistinct by length layers: layer k holds the patterns with
 * floor(log2 |P|) = k. Starts up to j - 2^(k+1) are covered by colored range
 * reporting on the longest layer pattern per position and walking up the
 * layer's modified suffix tree. The remaining short window is covered by
 * Report for aperiodic patterns and by the runs of small period for
 * periodic ones.
 *
 * Queries are stateful only through a DistinctScratch. The overload without
 * one uses a thread-local scratch, so concurrent queries from different
 * threads are safe.
 */
class DistinctIndex {
public:
    DistinctIndex() = default;
    DistinctIndex(const TextIndex& index, const InternalDictionary& dict);

    Index num_layers() const { return static_cast<Index>(layers_.size()); }

    void report_distinct(Index i, Index j, std::vector<Index>& out) const;
    void report_distinct(Index i, Index j, std::vector<Index>& out, DistinctScratch& scratch,
                         DistinctTrace* trace = nullptr) const;

    /// Layer k runs with per <= 2^k/3 and length >= 2^k overlapping w by >= 2^k.
    std::vector<Run> runs_overlapping(Index k, Fragment w) const;
    /// Patterns of layer k split by periodicity; empty when the layer is absent.
    std::vector<Index> layer_patterns(Index k, bool periodic) const;

private:
    struct Layer {
        Index k = 0;
        ModifiedSuffixTree all;          // D_k
        ColorRangeReporter longest;      // I_k = leaf parent in `all`
        OccurrenceIndex aperiodic;       // D_k^a
        bool has_aperiodic = false;
        ModifiedSuffixTree periodic;     // D_k^p
        RangeMin<Index> shortest_periodic;  // l_k
        bool has_periodic = false;
        std::vector<Run> runs;           // R_k, sorted by start (and end)
        std::vector<Index> run_ends;
        std::vector<Index> aperiodic_ids, periodic_ids;
    };

    const Layer* layer(Index k) const;

    Index n_ = 0;
    Index d_ = 0;
    std::vector<Layer> layers_;  // non-empty layers, by increasing k
};

}  // namespace idm
