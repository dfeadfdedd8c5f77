#include "idm/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace idm {

TextContext::TextContext(Text text)
    : forward_(text), backward_(text.reversed(), false), rslp_(forward_.text()), ipm_(forward_) {}

StaticEngine::StaticEngine(const TextContext& context, std::span<const Fragment> fragments, EngineOptions options)
    : context_(&context), dict_(context.forward(), fragments) {
    const TextIndex& fwd = context.forward();
    if (options.occurrences) occurrences_.emplace(ModifiedSuffixTree(fwd, dict_.marks()), fwd.size());
    if (options.distinct) distinct_.emplace(fwd, dict_);
    if (options.count) count_.emplace(fwd, context.backward(), context.rslp(), dict_);
    if (options.distinct_approx) distinct_approx_.emplace(fwd, context.backward(), context.rslp(), dict_);
}

template <class T>
const T& StaticEngine::need(const std::optional<T>& part, const char* what) {
    if (!part) throw std::logic_error(std::string("engine built without ") + what);
    return *part;
}

bool StaticEngine::exists(Index i, Index j) const {
    const auto& occ = need(occurrences_, "occurrence index");
    require_range(i, j, context_->size());
    return occ.exists(i, j);
}

void StaticEngine::report(Index i, Index j, std::vector<Occurrence>& out) const {
    const auto& occ = need(occurrences_, "occurrence index");
    require_range(i, j, context_->size());
    const auto from = out.size();
    occ.report(i, j, out);
    std::sort(out.begin() + from, out.end(), [](const Occurrence& a, const Occurrence& b) {
        return a.start != b.start ? a.start < b.start : a.pattern < b.pattern;
    });
}

void StaticEngine::report_distinct(Index i, Index j, std::vector<Index>& out) const {
    const auto& rd = need(distinct_, "distinct index");
    require_range(i, j, context_->size());
    const auto from = out.size();
    rd.report_distinct(i, j, out);
    std::sort(out.begin() + from, out.end());
}

Count StaticEngine::count(Index i, Index j) const { return need(count_, "count index").count(i, j); }

DistinctEstimate StaticEngine::count_distinct_approx(Index i, Index j) const {
    return need(distinct_approx_, "distinct count index").count_distinct(i, j);
}

const CountIndex& StaticEngine::count_index() const { return need(count_, "count index"); }

}  // namespace idm
