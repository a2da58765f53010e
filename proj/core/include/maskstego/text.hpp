#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maskstego {

inline constexpr std::string_view kMaskSurface = "[MASK]";

/// One unit of text on the active tokenizer grid.
///
/// The mask sentinel is a distinct state, not a surface string: a literal
/// "[MASK]" appearing in a cover text never compares equal to Token::mask().
class Token {
 public:
  explicit Token(std::string surface);

  static Token mask();

  const std::string& surface() const noexcept { return surface_; }
  bool is_mask() const noexcept { return mask_; }

  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token&, const Token&) = default;

 private:
  Token(std::string surface, bool mask) : surface_(std::move(surface)), mask_(mask) {}

  std::string surface_;
  bool mask_ = false;
};

using TokenSequence = std::vector<Token>;

/// Splits on ASCII whitespace; empty input yields an empty sequence.
TokenSequence split_whitespace(std::string_view text);

/// Joins surfaces with single spaces. Masked slots render as "[MASK]".
std::string join_tokens(const TokenSequence& tokens);

TokenSequence make_tokens(std::initializer_list<std::string_view> surfaces);

// Character classes used by the masking and payload rules. A "letter" is an
// ASCII letter or a decoded code point from the letter-bearing Unicode blocks
// (everything from U+00C0 up except the multiplication/division signs and the
// punctuation/symbol blocks U+2000-U+2BFF, U+3000-U+303F, U+FF00-U+FF20).
bool contains_letter(std::string_view utf8);
bool contains_alphanumeric(std::string_view utf8);

}  // namespace maskstego
