#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "idm/dynamic.hpp"
#include "idm/oracle.hpp"

using namespace idm;
using Key = DynamicEngine::Key;

namespace {

const std::vector<Fragment> kExampleDict{{3, 4}, {3, 6}, {9, 12}, {14, 14}};

struct Expected {
    bool exists;
    std::vector<std::pair<Index, Index>> occurrences;  // (start, length)
    std::vector<Key> distinct;
    Count count;
};

Expected static_answer(const DynamicEngine& dyn, const StaticEngine& engine, Index i, Index j) {
    Expected e;
    e.exists = engine.exists(i, j);
    std::vector<Occurrence> occ;
    engine.report(i, j, occ);
    for (const auto& o : occ) e.occurrences.push_back({o.start, engine.dictionary().length(o.pattern)});
    std::sort(e.occurrences.begin(), e.occurrences.end());
    std::vector<Index> ids;
    engine.report_distinct(i, j, ids);
    for (Index id : ids) e.distinct.push_back(dyn.key(engine.dictionary().fragment(id)));
    std::sort(e.distinct.begin(), e.distinct.end());
    e.count = engine.count(i, j);
    return e;
}

bool matches(const DynamicEngine& dyn, const Expected& e, Index i, Index j) {
    std::vector<DynamicEngine::KeyedOccurrence> occ;
    dyn.report(i, j, occ);
    std::vector<std::pair<Index, Index>> got;
    for (const auto& o : occ) got.push_back({o.start, o.pattern.length});
    std::vector<Key> distinct;
    dyn.report_distinct(i, j, distinct);
    return dyn.exists(i, j) == e.exists && got == e.occurrences && distinct == e.distinct && dyn.count(i, j) == e.count;
}

std::vector<Fragment> fragments_of(const std::vector<Key>& keys) {
    std::vector<Fragment> out;
    for (const Key& k : keys) out.push_back(k.fragment());
    return out;
}

void check_reduced(const DynamicEngine& dyn) {
    std::map<Index, Index> shortest;
    for (const Key& k : dyn.patterns()) {
        auto [it, fresh] = shortest.emplace(k.position, k.length);
        if (!fresh) it->second = std::min(it->second, k.length);
    }
    std::vector<Key> want;
    for (const auto& [p, len] : shortest) want.push_back({p, len});
    CHECK(dyn.reduced() == want);
}

}  // namespace

TEST_CASE("internal pattern matching") {
    const TextContext ctx(Text::from_string("adaaaabaabbaac"));
    const IpmIndex& ipm = ctx.ipm();
    CHECK(ipm.count({3, 4}, 2, 12) == 4);
    CHECK(ipm.count({3, 6}, 1, 14) == 1);
    CHECK(ipm.count({3, 6}, 4, 6) == 0);
    std::vector<Index> starts;
    ipm.report({3, 4}, 2, 12, starts);
    CHECK(starts == std::vector<Index>{3, 4, 5, 8});
    CHECK(ipm.leftmost_occurrence({4, 5}) == 3);
    CHECK(ipm.leftmost_occurrence({1, 14}) == 1);
    CHECK(ipm.leftmost_occurrence({14, 14}) == 14);
    CHECK_THROWS_AS(ipm.count({3, 4}, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(ipm.count({13, 15}, 1, 5), std::out_of_range);

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto inst = oracle::random_instance(seed, 60 + static_cast<Index>(seed * 11 % 90), 1 + seed % 3, 20);
        const TextContext c(inst.text);
        const Index n = inst.text.size();
        for (const Fragment& f : inst.fragments) {
            const auto p = inst.text.substring(f);
            Index first = 0;
            for (Index a = n - f.length() + 1; a >= 1; --a) {
                if (oracle::occurs_at(inst.text, p, a)) first = a;
            }
            CHECK(c.ipm().leftmost_occurrence(f) == first);
            for (Index i = 1; i <= n; ++i) {
                Count want = 0;
                for (Index j = i; j <= n; ++j) {
                    const Index a = j - f.length() + 1;
                    if (a >= i && oracle::occurs_at(inst.text, p, a)) ++want;
                    if (c.ipm().count(f, i, j) != want) FAIL("ipm count mismatch seed " << seed);
                }
            }
        }
    }
}

TEST_CASE("static engine on the example") {
    const TextContext ctx(Text::from_string("adaaaabaabbaac"));
    const StaticEngine engine(ctx, kExampleDict);
    CHECK(engine.exists(2, 12));
    CHECK_FALSE(engine.exists(1, 3));
    std::vector<Occurrence> occ;
    engine.report(2, 12, occ);
    CHECK(occ == std::vector<Occurrence>{{0, 3}, {1, 3}, {0, 4}, {0, 5}, {0, 8}, {2, 9}});
    std::vector<Index> ids;
    engine.report_distinct(2, 12, ids);
    CHECK(ids == std::vector<Index>{0, 1, 2});
    CHECK(engine.count(2, 12) == 6);
    CHECK_THROWS_AS(engine.exists(3, 2), std::out_of_range);

    const StaticEngine bare(ctx, kExampleDict, {true, false, false, false});
    CHECK_THROWS_AS(bare.count(1, 2), std::logic_error);
}

TEST_CASE("dynamic example and edge cases") {
    const TextContext ctx(Text::from_string("adaaaabaabbaac"));
    DynamicEngine dyn(ctx, {}, 100);
    CHECK_FALSE(dyn.exists(1, 14));
    CHECK(dyn.count(1, 14) == 0);
    std::vector<Key> keys;
    dyn.report_distinct(1, 14, keys);
    CHECK(keys.empty());
    CHECK_THROWS_AS(dyn.erase({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(dyn.insert({5, 4}), std::invalid_argument);
    CHECK_THROWS_AS(dyn.insert({10, 15}), std::out_of_range);

    for (const Fragment& f : kExampleDict) CHECK(dyn.insert(f));
    CHECK_FALSE(dyn.insert({12, 13}));  // aa again
    CHECK(dyn.count(2, 12) == 6);
    CHECK(dyn.exists(2, 12));
    CHECK_FALSE(dyn.exists(1, 3));
    dyn.report_distinct(2, 12, keys);
    CHECK(keys == std::vector<Key>{{3, 2}, {3, 4}, {9, 4}});
    std::vector<DynamicEngine::KeyedOccurrence> occ;
    dyn.report(2, 12, occ);
    REQUIRE(occ.size() == 6);
    CHECK(occ[1].start == 3);
    CHECK(occ[1].pattern.length == 4);
    CHECK(dyn.rebuilds() == 0);

    // insert followed by delete restores every answer
    const TextContext& c = ctx;
    std::vector<Expected> before;
    const StaticEngine reference(c, fragments_of(dyn.patterns()));
    for (Index i = 1; i <= 14; ++i) {
        for (Index j = i; j <= 14; ++j) before.push_back(static_answer(dyn, reference, i, j));
    }
    dyn.insert({7, 9});
    dyn.erase({7, 9});
    std::size_t k = 0;
    for (Index i = 1; i <= 14; ++i) {
        for (Index j = i; j <= 14; ++j) CHECK(matches(dyn, before[k++], i, j));
    }
}

TEST_CASE("reduction vector") {
    const TextContext ctx(Text::from_integers("1 0 3 0 0 0 3 4 0 2 0 4"));
    DynamicEngine dyn(ctx, {});
    dyn.insert({1, 1});
    dyn.insert({10, 10});
    CHECK(dyn.exists(1, 4));
    CHECK_FALSE(dyn.exists(5, 8));
    CHECK(dyn.exists(9, 12));
}

TEST_CASE("epoch rebuilds") {
    const TextContext ctx(Text::from_string("abaababaabaababaababa"));
    DynamicEngine dyn(ctx, {}, 4);
    CHECK(dyn.epoch() == 4);
    for (Index a : {1, 2, 3, 5}) CHECK(dyn.insert({a, a + 2}));
    CHECK(dyn.rebuilds() == 1);
    CHECK(dyn.pending_updates() == 0);
    dyn.insert({1, 3});  // duplicate, not an update
    CHECK(dyn.pending_updates() == 0);
    const DynamicEngine by_default(ctx, std::vector<Fragment>{{1, 2}, {2, 3}});
    CHECK(by_default.epoch() == 5);  // ceil(sqrt(21 + 2))
}

TEST_CASE("random update scripts against fresh static builds") {
    std::uint64_t seed = 500;
    for (Index alphabet : {1, 2, 4, 26}) {
        for (int rep = 0; rep < 3; ++rep, ++seed) {
            const Index n = 10 + static_cast<Index>(seed * 37 % 50);
            const auto inst = oracle::random_instance(seed, n, alphabet, 12);
            const TextContext ctx(inst.text);
            for (Index m : {1, 3, static_cast<Index>(std::ceil(std::sqrt(n))), n}) {
                std::mt19937_64 rng(seed * 31 + m);
                DynamicEngine dyn(ctx, std::span(inst.fragments).first(inst.fragments.size() / 2), m);
                const oracle::Instance pool = oracle::random_instance(seed + 7, n, alphabet, 40);
                for (int step = 0; step < 40; ++step) {
                    const auto current = dyn.patterns();
                    if (!current.empty() && rng() % 3 == 0) {
                        dyn.erase(current[rng() % current.size()].fragment());
                    } else {
                        dyn.insert(inst.fragments.empty() || rng() % 2 ? pool.fragments[rng() % pool.fragments.size()]
                                                                        : inst.fragments[rng() % inst.fragments.size()]);
                    }
                    check_reduced(dyn);
                    const StaticEngine fresh(ctx, fragments_of(dyn.patterns()), {true, true, true, false});
                    for (Index i = 1; i <= n; ++i) {
                        for (Index j = i; j <= n; ++j) {
                            if (!matches(dyn, static_answer(dyn, fresh, i, j), i, j)) {
                                FAIL("dynamic answer differs on [" << i << ".." << j << "] seed " << seed << " m " << m
                                                                   << " step " << step);
                            }
                        }
                    }
                }
            }
        }
    }
}
