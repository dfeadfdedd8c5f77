#include "idm/text.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace idm {

Text::Text(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("text must be non-empty");
    }
    if (*std::min_element(letters_.begin(), letters_.end()) == std::numeric_limits<Letter>::min()) {
        throw std::invalid_argument("letter value collides with the sentinel");
    }
}

Text Text::from_string(std::string_view s) {
    std::vector<Letter> letters;
    letters.reserve(s.size());
    for (unsigned char c : s) {
        letters.push_back(static_cast<Letter>(c));
    }
    return Text(std::move(letters));
}

Text Text::from_integers(std::string_view s) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    while (pos < s.size()) {
        while (pos < s.size() && is_space(s[pos])) ++pos;
        if (pos == s.size()) break;
        std::size_t end = pos;
        while (end < s.size() && !is_space(s[end])) ++end;
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
        if (ec != std::errc() || ptr != s.data() + end) {
            throw std::invalid_argument("malformed integer letter '" + std::string(s.substr(pos, end - pos)) + "'");
        }
        letters.push_back(value);
        pos = end;
    }
    return Text(std::move(letters));
}

Text Text::reversed() const {
    std::vector<Letter> r(letters_.rbegin(), letters_.rend());
    return Text(std::move(r));
}

std::vector<Letter> Text::substring(Fragment f) const {
    if (f.empty()) return {};
    return {letters_.begin() + (f.start - 1), letters_.begin() + f.end};
}

void Text::require_fragment(Fragment f) const {
    if (f.start < 1 || f.end > size() || f.start > f.end) {
        throw std::out_of_range("fragment [" + std::to_string(f.start) + ".." + std::to_string(f.end) +
                                "] is not a non-empty fragment of a text of length " + std::to_string(size()));
    }
}

void Text::require_range(Index i, Index j) const { idm::require_range(i, j, size()); }

void require_range(Index i, Index j, Index n) {
    if (i < 1 || j > n || i > j) {
        throw std::out_of_range("query range [" + std::to_string(i) + ".." + std::to_string(j) +
                                "] invalid for text of length " + std::to_string(n));
    }
}

std::string render_letters(std::span<const Letter> letters, bool as_bytes) {
    std::string out;
    if (as_bytes) {
        for (Letter c : letters) out.push_back(static_cast<char>(c));
        return out;
    }
    out.push_back('[');
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) out.push_back(' ');
        out += std::to_string(letters[k]);
    }
    out.push_back(']');
    return out;
}

}  // namespace idm
