#pragma once

#include <bit>
#include <random>
#include <string>

#include "idm/text.hpp"

namespace idm::testing {

inline Text fibonacci_text(Index n) {
    std::string a = "a", b = "ab";
    while (static_cast<Index>(b.size()) < n) {
        std::string c = b + a;
        a = std::move(b);
        b = std::move(c);
    }
    return Text::from_string(b.substr(0, n));
}

inline Text thue_morse_text(Index n) {
    std::string s;
    for (Index k = 0; k < n; ++k) s.push_back(std::popcount(static_cast<unsigned>(k)) % 2 ? 'b' : 'a');
    return Text::from_string(s);
}

inline Text unary_text(Index n) { return Text::from_string(std::string(n, 'a')); }

inline Text random_text(std::uint64_t seed, Index n, Index alphabet) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, alphabet - 1);
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>('a' + letter(rng));
    return Text::from_string(s);
}

}  // namespace idm::testing
