#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "idm/dictionary.hpp"
#include "idm/oracle.hpp"

using namespace idm;

namespace {

const std::vector<Fragment> kExampleDict{{3, 4}, {3, 6}, {9, 12}, {14, 14}};

std::vector<Occurrence> sorted(std::vector<Occurrence> v) {
    std::sort(v.begin(), v.end(), [](const Occurrence& a, const Occurrence& b) {
        return std::pair(a.start, a.pattern) < std::pair(b.start, b.pattern);
    });
    return v;
}

bool is_prefix(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

TEST_CASE("example dictionary") {
    const TextIndex index(Text::from_string("adaaaabaabbaac"));
    const InternalDictionary dict(index, kExampleDict);
    CHECK(dict.size() == 4);
    std::vector<Fragment> with_dup = kExampleDict;
    with_dup.push_back({4, 5});
    const InternalDictionary dup(index, with_dup);
    CHECK(dup.size() == 4);
    CHECK(dup.input_ids() == std::vector<Index>{0, 1, 2, 3, 0});
    CHECK(dup.find(index, {12, 13}) == 0);
    CHECK(dup.find(index, {1, 2}) == kNone);
    CHECK_THROWS_AS(InternalDictionary(index, std::vector<Fragment>{{5, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(InternalDictionary(index, std::vector<Fragment>{{10, 15}}), std::out_of_range);
}

TEST_CASE("modified suffix tree of the example") {
    const TextIndex index(Text::from_string("adaaaabaabbaac"));
    const InternalDictionary dict(index, kExampleDict);
    const ModifiedSuffixTree tree(index, dict.marks());
    CHECK(tree.num_nodes() == 5);
    const Index aa = tree.node_of_pattern(0), aaaa = tree.node_of_pattern(1);
    const Index abba = tree.node_of_pattern(2), c = tree.node_of_pattern(3);
    CHECK(tree.parent(aa) == 0);
    CHECK(tree.parent(aaaa) == aa);
    CHECK(tree.parent(abba) == 0);
    CHECK(tree.parent(c) == 0);
    Index plain = 0;
    for (Index pos = 1; pos <= 14; ++pos) plain += tree.leaf_parent(pos) == 0;
    CHECK(plain == 7);
    CHECK(tree.leaf_parent(15) == 0);

    std::vector<Index> out;
    tree.patterns_at(3, 12 - 3 + 1, out);
    CHECK(out == std::vector<Index>{0, 1});
    out.clear();
    tree.patterns_at(3, 2, out);
    CHECK(out == std::vector<Index>{0});
    out.clear();
    tree.patterns_at(2, 13, out);
    CHECK(out.empty());

    const ModifiedSuffixTree bare(index, {});
    CHECK(bare.num_nodes() == 1);
    for (Index pos = 1; pos <= 15; ++pos) CHECK(bare.leaf_parent(pos) == 0);

    const InternalDictionary whole(index, std::vector<Fragment>{{1, 14}});
    const ModifiedSuffixTree one(index, whole.marks());
    CHECK(one.num_nodes() == 2);
    for (Index pos = 1; pos <= 15; ++pos) CHECK(one.leaf_parent(pos) == (pos == 1 ? 1 : 0));
}

TEST_CASE("exists and report on the example") {
    const TextIndex index(Text::from_string("adaaaabaabbaac"));
    const InternalDictionary dict(index, kExampleDict);
    const OccurrenceIndex occ(ModifiedSuffixTree(index, dict.marks()), index.size());
    CHECK(occ.exists(2, 12));
    CHECK_FALSE(occ.exists(1, 3));
    CHECK(occ.exists(14, 14));

    std::vector<Occurrence> out;
    occ.report(2, 12, out);
    CHECK(sorted(out) == std::vector<Occurrence>{{0, 3}, {1, 3}, {0, 4}, {0, 5}, {0, 8}, {2, 9}});
    out.clear();
    occ.report(1, 1, out);
    CHECK(out.empty());
    out.clear();
    occ.report(1, 14, out);
    CHECK(sorted(out) == std::vector<Occurrence>{{0, 3}, {1, 3}, {0, 4}, {0, 5}, {0, 8}, {2, 9}, {0, 12}, {3, 14}});

    const InternalDictionary none(index, {});
    const OccurrenceIndex empty(ModifiedSuffixTree(index, none.marks()), index.size());
    CHECK_FALSE(empty.exists(1, 14));
}

TEST_CASE("random instances against the oracle") {
    std::uint64_t seed = 1;
    for (Index alphabet : {1, 2, 4, 26}) {
        for (int rep = 0; rep < 5; ++rep, ++seed) {
            const Index n = 20 + static_cast<Index>(seed * 37 % 180);
            const auto inst = oracle::random_instance(seed, n, alphabet, 1 + static_cast<Index>(seed % 50));
            const TextIndex index(inst.text);
            const InternalDictionary dict(index, inst.fragments);
            const oracle::Dictionary odict(inst.text, inst.fragments);
            REQUIRE(dict.size() == odict.size());
            for (Index id = 0; id < dict.size(); ++id) {
                CHECK(inst.text.substring(dict.fragment(id)) == odict.pattern(id));
            }
            const ModifiedSuffixTree tree(index, dict.marks());
            CHECK(tree.num_nodes() == dict.size() + 1);
            CHECK(tree.num_nodes() <= n + 1 + dict.size() + 1);

            // ancestor iff prefix
            for (Index u = 1; u < tree.num_nodes(); ++u) {
                for (Index v = 1; v < tree.num_nodes(); ++v) {
                    const bool prefix = is_prefix(odict.pattern(tree.pattern(u)), odict.pattern(tree.pattern(v)));
                    if (prefix != tree.is_ancestor(u, v)) FAIL("ancestor/prefix mismatch");
                }
            }

            const OccurrenceIndex occ(tree, n);
            for (Index a = 1; a <= n; ++a) {
                Index shortest = kInfinity;
                for (Index id = 0; id < odict.size(); ++id) {
                    if (oracle::occurs_at(inst.text, odict.pattern(id), a)) shortest = std::min(shortest, a + odict.length(id) - 1);
                }
                CHECK(occ.shortest_end(a) == shortest);
            }
            for (Index i = 1; i <= n; i += 3) {
                for (Index j = i; j <= n; j += 2) {
                    const auto want = oracle::answer(inst.text, odict, i, j);
                    std::vector<Occurrence> got;
                    occ.report(i, j, got);
                    if (sorted(got) != want.occurrences || occ.exists(i, j) != want.exists) {
                        FAIL("mismatch on [" << i << ".." << j << "] seed " << seed);
                    }
                }
            }
        }
    }
}
