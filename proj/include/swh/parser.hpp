#pragma once

// Textual syntax for subword histories.
//
//   expr     := term (('+' | '-') term)*
//   term     := '-' term | factor ('*' factor)*
//   factor   := atom ('^' natural)?
//   atom     := integer '*' factor | integer | monomial | '(' expr ')'
//   monomial := letter+
//
// Juxtaposed letters are a single monomial ("ab" is the word ab). An integer
// literal k is k·λ, with "1" being the λ monomial itself; "x^0" is λ.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swh/core.hpp"

namespace swh {

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownLetter, BadInteger, BadExponent };

    ParseError(Kind kind, std::size_t position, std::string expected, std::string found);

    Kind kind() const { return kind_; }
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    Kind kind_;
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

SH parse(std::string_view text, const Alphabet& alphabet);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string pretty(const SubwordHistory& sh);
inline std::string pretty(const SH& sh) { return pretty(*sh); }

}  // namespace swh
