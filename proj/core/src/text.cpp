#include "maskstego/text.hpp"

#include <cstdint>
#include <optional>

#include "maskstego/error.hpp"

namespace maskstego {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::bounds: return "bounds";
    case ErrorKind::contract: return "contract";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::truncated_stream: return "truncated-stream";
    case ErrorKind::degenerate_set: return "degenerate-set";
    case ErrorKind::desync: return "desync";
    case ErrorKind::transport: return "transport";
    case ErrorKind::protocol: return "protocol";
    case ErrorKind::determinism: return "determinism";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
    case ErrorKind::format: return "format";
    case ErrorKind::undefined_payload: return "undefined-payload";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Token::Token(std::string surface) : surface_(std::move(surface)) {
  if (surface_.empty()) throw Error(ErrorKind::contract, "token surface must be non-empty");
}

Token Token::mask() { return Token(std::string(kMaskSurface), true); }

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_letter(unsigned char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

// Decodes one UTF-8 sequence at `pos`; malformed input yields nullopt and
// advances by one byte.
std::optional<char32_t> decode_utf8(std::string_view s, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  std::size_t length = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    length = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    cp = lead & 0x07;
  } else {
    ++pos;
    return std::nullopt;
  }
  if (pos + length > s.size()) {
    ++pos;
    return std::nullopt;
  }
  for (std::size_t k = 1; k < length; ++k) {
    const auto cont = static_cast<unsigned char>(s[pos + k]);
    if ((cont & 0xC0) != 0x80) {
      ++pos;
      return std::nullopt;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  pos += length;
  return cp;
}

bool is_letter_code_point(char32_t cp) {
  if (cp < 0x80) return is_ascii_letter(static_cast<unsigned char>(cp));
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF20) return false;
  return true;
}

template <typename Pred>
bool any_code_point(std::string_view utf8, Pred pred) {
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    if (auto cp = decode_utf8(utf8, pos); cp && pred(*cp)) return true;
  }
  return false;
}

}  // namespace

TokenSequence split_whitespace(std::string_view text) {
  TokenSequence out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_ascii_space(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_ascii_space(text[pos])) ++pos;
    if (pos > start) out.emplace_back(std::string(text.substr(start, pos - start)));
  }
  return out;
}

std::string join_tokens(const TokenSequence& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += tokens[i].surface();
  }
  return out;
}

TokenSequence make_tokens(std::initializer_list<std::string_view> surfaces) {
  TokenSequence out;
  out.reserve(surfaces.size());
  for (auto s : surfaces) {
    if (s == kMaskSurface) {
      out.push_back(Token::mask());
    } else {
      out.emplace_back(std::string(s));
    }
  }
  return out;
}

bool contains_letter(std::string_view utf8) { return any_code_point(utf8, is_letter_code_point); }

bool contains_alphanumeric(std::string_view utf8) {
  return any_code_point(utf8, [](char32_t cp) {
    return (cp >= U'0' && cp <= U'9') || is_letter_code_point(cp);
  });
}

}  // namespace maskstego
