#include "idm/oracle.hpp"

#include <algorithm>
#include <random>

namespace idm::oracle {

Dictionary::Dictionary(const Text& text, std::span<const Fragment> fragments) {
    std::map<std::vector<Letter>, Index> seen;
    for (const Fragment& f : fragments) {
        auto content = text.substring(f);
        if (seen.emplace(content, size()).second) patterns_.push_back(std::move(content));
    }
}

bool occurs_at(const Text& text, std::span<const Letter> pattern, Index pos) {
    const Index m = static_cast<Index>(pattern.size());
    if (pos < 1 || pos + m - 1 > text.size()) return false;
    for (Index k = 0; k < m; ++k) {
        if (text[pos + k] != pattern[k]) return false;
    }
    return true;
}

Answer answer(const Text& text, const Dictionary& dict, Index i, Index j) {
    Answer out;
    for (Index a = i; a <= j; ++a) {
        for (Index id = 0; id < dict.size(); ++id) {
            if (a + dict.length(id) - 1 <= j && occurs_at(text, dict.pattern(id), a)) {
                out.occurrences.push_back({id, a});
                out.distinct.push_back(id);
            }
        }
    }
    std::sort(out.occurrences.begin(), out.occurrences.end(),
              [](const Occurrence& x, const Occurrence& y) { return std::pair(x.start, x.pattern) < std::pair(y.start, y.pattern); });
    std::sort(out.distinct.begin(), out.distinct.end());
    out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()), out.distinct.end());
    out.count = static_cast<Count>(out.occurrences.size());
    out.distinct_count = static_cast<Count>(out.distinct.size());
    out.exists = out.count > 0;
    return out;
}

std::vector<std::vector<Occurrence>> occurrences_by_end(const Text& text, const Dictionary& dict) {
    std::vector<std::vector<Occurrence>> by_end(text.size() + 1);
    for (Index a = 1; a <= text.size(); ++a) {
        for (Index id = 0; id < dict.size(); ++id) {
            if (occurs_at(text, dict.pattern(id), a)) by_end[a + dict.length(id) - 1].push_back({id, a});
        }
    }
    return by_end;
}

Index lce(const Text& text, Index a, Index b) {
    Index k = 0;
    while (a + k <= text.size() && b + k <= text.size() && text[a + k] == text[b + k]) ++k;
    return k;
}

Index smallest_period(std::span<const Letter> s) {
    const Index m = static_cast<Index>(s.size());
    for (Index p = 1; p < m; ++p) {
        bool ok = true;
        for (Index x = 0; x + p < m && ok; ++x) ok = s[x] == s[x + p];
        if (ok) return p;
    }
    return m;
}

std::vector<Run> runs(const Text& text) {
    const Index n = text.size();
    std::vector<Run> out;
    std::vector<Index> fail(n + 1);
    for (Index s = 1; s <= n; ++s) {
        // fail[len] = longest proper border of T[s..s+len-1]
        fail[1] = 0;
        for (Index len = 1; len <= n - s + 1; ++len) {
            if (len > 1) {
                Index b = fail[len - 1];
                while (b > 0 && text[s + b] != text[s + len - 1]) b = fail[b];
                if (text[s + b] == text[s + len - 1] && b + 1 < len) ++b;
                fail[len] = b;
            }
            const Index p = len - fail[len];
            const Index e = s + len - 1;
            if (2 * p > len) continue;
            const bool left_max = s == 1 || text[s - 1] != text[s - 1 + p];
            const bool right_max = e == n || text[e + 1] != text[e + 1 - p];
            if (left_max && right_max) out.push_back({s, e, p});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Instance random_instance(std::uint64_t seed, Index n, Index alphabet, Index d) {
    std::mt19937_64 rng(seed);
    auto draw = [&](Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); };

    std::vector<Letter> letters;
    letters.reserve(n);
    while (static_cast<Index>(letters.size()) < n) {
        if (draw(0, 3) == 0) {
            // periodic block
            const Index p = draw(1, 4);
            std::vector<Letter> word(p);
            for (auto& c : word) c = 'a' + draw(0, alphabet - 1);
            const Index len = draw(2 * p, 6 * p + 4);
            for (Index k = 0; k < len && static_cast<Index>(letters.size()) < n; ++k) letters.push_back(word[k % p]);
        } else {
            letters.push_back('a' + draw(0, alphabet - 1));
        }
    }
    Instance inst{Text(std::move(letters)), {}};

    auto random_fragment = [&](Index max_len) {
        const Index len = draw(1, std::min(n, max_len));
        const Index s = draw(1, n - len + 1);
        return Fragment{s, s + len - 1};
    };
    for (Index k = 0; k < d; ++k) {
        const Index kind = draw(0, 9);
        if (kind < 3) {
            inst.fragments.push_back(random_fragment(3));
        } else if (kind < 6) {
            // periodic: extend a short seed while its period holds
            const Fragment seed_frag = random_fragment(4);
            const Index p = seed_frag.length();
            Index e = seed_frag.end;
            const Index limit = std::min(n, seed_frag.start + draw(2 * p, 8 * p) - 1);
            while (e < limit && inst.text[e + 1] == inst.text[e + 1 - p]) ++e;
            inst.fragments.push_back({seed_frag.start, e});
        } else if (kind < 8 && !inst.fragments.empty()) {
            // nested: a prefix or inner fragment of an earlier pattern
            const Fragment base = inst.fragments[draw(0, static_cast<Index>(inst.fragments.size()) - 1)];
            const Index s = draw(0, 1) == 0 ? base.start : draw(base.start, base.end);
            inst.fragments.push_back({s, draw(s, base.end)});
        } else {
            inst.fragments.push_back(random_fragment(n));
        }
    }
    return inst;
}

}  // namespace idm::oracle
