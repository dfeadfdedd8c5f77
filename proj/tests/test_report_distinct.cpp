#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>

#include "idm/oracle.hpp"
#include "idm/report_distinct.hpp"

using namespace idm;

namespace {

const std::vector<Fragment> kExampleDict{{3, 4}, {3, 6}, {9, 12}, {14, 14}};

std::vector<Index> sorted_distinct(const DistinctIndex& rd, Index i, Index j) {
    std::vector<Index> out;
    rd.report_distinct(i, j, out);
    std::sort(out.begin(), out.end());
    return out;
}

Index floor_log2(Index x) { return static_cast<Index>(std::bit_width(static_cast<std::uint32_t>(x))) - 1; }

}  // namespace

TEST_CASE("layers of the example") {
    const TextIndex index(Text::from_string("adaaaabaabbaac"));
    const InternalDictionary dict(index, kExampleDict);
    const DistinctIndex rd(index, dict);
    CHECK(rd.layer_patterns(0, false) == std::vector<Index>{3});
    CHECK(rd.layer_patterns(1, false) == std::vector<Index>{0});
    CHECK(rd.layer_patterns(1, true).empty());
    CHECK(rd.layer_patterns(2, true) == std::vector<Index>{1});
    CHECK(rd.layer_patterns(2, false) == std::vector<Index>{2});
    CHECK(rd.num_layers() == 3);

    CHECK(rd.runs_overlapping(2, {2, 12}) == std::vector<Run>{{3, 6, 1}});
    CHECK(rd.runs_overlapping(3, {2, 12}).empty());
    CHECK(rd.runs_overlapping(2, {11, 14}).empty());

    CHECK(sorted_distinct(rd, 2, 12) == std::vector<Index>{0, 1, 2});
    CHECK(sorted_distinct(rd, 1, 2).empty());
    CHECK(sorted_distinct(rd, 1, 14) == std::vector<Index>{0, 1, 2, 3});

    const DistinctIndex none(index, InternalDictionary(index, {}));
    CHECK(none.num_layers() == 0);
    CHECK(sorted_distinct(none, 1, 14).empty());

    const InternalDictionary five(index, std::vector<Fragment>{{2, 6}});
    const DistinctIndex rd5(index, five);
    CHECK(rd5.num_layers() == 1);
    CHECK(rd5.layer_patterns(2, false) == std::vector<Index>{0});
}

TEST_CASE("random instances against the oracle") {
    std::uint64_t seed = 100;
    for (Index alphabet : {1, 2, 4, 26}) {
        for (int rep = 0; rep < 6; ++rep, ++seed) {
            const Index n = 30 + static_cast<Index>(seed * 53 % 170);
            const auto inst = oracle::random_instance(seed, n, alphabet, 1 + static_cast<Index>(seed * 7 % 50));
            const TextIndex index(inst.text);
            const InternalDictionary dict(index, inst.fragments);
            const oracle::Dictionary odict(inst.text, inst.fragments);
            const DistinctIndex rd(index, dict);
            const auto by_end = oracle::occurrences_by_end(inst.text, odict);

            // layer soundness, and aperiodic layer patterns occur sparsely
            for (Index k = 0; k <= floor_log2(n); ++k) {
                for (bool periodic : {false, true}) {
                    for (Index id : rd.layer_patterns(k, periodic)) {
                        CHECK(floor_log2(dict.length(id)) == k);
                        const Index p = oracle::smallest_period(odict.pattern(id));
                        CHECK((3 * p <= (Index{1} << k)) == periodic);
                        if (!periodic) {
                            Index prev = -n;
                            for (Index a = 1; a <= n; ++a) {
                                if (!oracle::occurs_at(inst.text, odict.pattern(id), a)) continue;
                                CHECK(6 * (a - prev) > dict.length(id));
                                prev = a;
                            }
                        }
                    }
                }
            }

            DistinctScratch scratch;
            for (Index i = 1; i <= n; ++i) {
                std::vector<char> present(odict.size(), 0);
                std::vector<Index> want;
                for (Index j = i; j <= n; ++j) {
                    for (const Occurrence& o : by_end[j]) {
                        if (o.start >= i && !present[o.pattern]) {
                            present[o.pattern] = 1;
                            want.push_back(o.pattern);
                        }
                    }
                    std::vector<Index> got;
                    DistinctTrace trace;
                    rd.report_distinct(i, j, got, scratch, &trace);
                    std::sort(got.begin(), got.end());
                    std::vector<Index> w = want;
                    std::sort(w.begin(), w.end());
                    if (got != w) FAIL("distinct mismatch on [" << i << ".." << j << "] seed " << seed);
                    std::map<Index, int> per_pattern;
                    for (const auto& [k, id] : trace.emissions) {
                        if (floor_log2(dict.length(id)) != k) FAIL("pattern emitted by the wrong layer");
                        if (++per_pattern[id] > 64) FAIL("emission cap exceeded on [" << i << ".." << j << "]");
                    }
                }
            }
        }
    }
}
