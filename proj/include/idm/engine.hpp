#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idm/count.hpp"
#include "idm/count_distinct.hpp"
#include "idm/dictionary.hpp"
#include "idm/ipm.hpp"
#include "idm/recompression.hpp"
#include "idm/report_distinct.hpp"
#include "idm/text_index.hpp"

namespace idm {

/// Dictionary-independent structures over the text. Not movable: the members
/// refer to each other.
class TextContext {
public:
    explicit TextContext(Text text);
    TextContext(const TextContext&) = delete;
    TextContext& operator=(const TextContext&) = delete;

    const Text& text() const { return forward_.text(); }
    Index size() const { return forward_.size(); }
    const TextIndex& forward() const { return forward_; }
    const TextIndex& backward() const { return backward_; }
    const Rslp& rslp() const { return rslp_; }
    const IpmIndex& ipm() const { return ipm_; }

private:
    TextIndex forward_;
    TextIndex backward_;
    Rslp rslp_;
    IpmIndex ipm_;
};

struct EngineOptions {
    bool occurrences = true;     // Exists and Report
    bool distinct = true;        // ReportDistinct
    bool count = true;
    bool distinct_approx = true;
};

/// All query structures for one fixed dictionary. The context must outlive it.
class StaticEngine {
public:
    StaticEngine(const TextContext& context, std::span<const Fragment> fragments, EngineOptions options = {});

    const TextContext& context() const { return *context_; }
    const InternalDictionary& dictionary() const { return dict_; }

    bool exists(Index i, Index j) const;
    /// Sorted by (start, pattern id).
    void report(Index i, Index j, std::vector<Occurrence>& out) const;
    /// Sorted ids.
    void report_distinct(Index i, Index j, std::vector<Index>& out) const;
    Count count(Index i, Index j) const;
    DistinctEstimate count_distinct_approx(Index i, Index j) const;

    const CountIndex& count_index() const;

private:
    template <class T>
    static const T& need(const std::optional<T>& part, const char* what);

    const TextContext* context_;
    InternalDictionary dict_;
    std::optional<OccurrenceIndex> occurrences_;
    std::optional<DistinctIndex> distinct_;
    std::optional<CountIndex> count_;
    std::optional<DistinctCountIndex> distinct_approx_;
};

}  // namespace idm
