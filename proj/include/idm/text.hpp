#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idm/types.hpp"

namespace idm {

/// Immutable text with 1-based access.
class Text {
public:
    Text() = default;
    explicit Text(std::vector<Letter> letters);

    static Text from_string(std::string_view s);
    /// Whitespace-separated integers, e.g. "1 0 3 0".
    static Text from_integers(std::string_view s);

    Index size() const { return static_cast<Index>(letters_.size()); }
    Letter operator[](Index pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }
    std::span<const Letter> letters() const { return letters_; }

    Text reversed() const;
    std::vector<Letter> substring(Fragment f) const;

    /// Throws std::out_of_range unless f is a non-empty fragment of the text.
    void require_fragment(Fragment f) const;
    /// Throws std::out_of_range unless 1 <= i <= j <= n.
    void require_range(Index i, Index j) const;

private:
    std::vector<Letter> letters_;
};

/// Throws std::out_of_range unless 1 <= i <= j <= n.
void require_range(Index i, Index j, Index n);

/// Renders a letter sequence: bytes verbatim, otherwise "[a b c]".
std::string render_letters(std::span<const Letter> letters, bool as_bytes);

}  // namespace idm
