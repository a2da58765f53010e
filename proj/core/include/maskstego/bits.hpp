#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

using BitVector = std::vector<bool>;

/// Width of the big-endian length header that prefixes every framed message.
inline constexpr std::size_t kHeaderBits = 32;

BitVector parse_bits(std::string_view zeros_and_ones);
std::string format_bits(const BitVector& bits);

// Octets are expanded most-significant bit first.
BitVector bits_from_bytes(std::span<const std::uint8_t> bytes);
/// Packs bits MSB-first; a trailing partial octet is zero-filled.
std::vector<std::uint8_t> bytes_from_bits(const BitVector& bits);

std::string encode_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> decode_hex(std::string_view text);
std::string encode_base64(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> decode_base64(std::string_view text);

/// Prepends the 32-bit big-endian message length. Padding is not materialized;
/// the encoder extends the stream with zeros on the fly.
BitVector frame_message(const BitVector& message);

/// Returns exactly the L message bits announced by the header and ignores
/// anything after them.
BitVector unframe_message(const BitVector& framed);

/// Incrementally collects a framed stream and reports how many bits are
/// still owed once the header has arrived.
class FrameCollector {
 public:
  void append(const BitVector& bits);

  /// Total framed length, known once the header is complete.
  std::optional<std::size_t> expected_bits() const;
  bool complete() const;
  std::size_t collected() const noexcept { return bits_.size(); }
  const BitVector& bits() const noexcept { return bits_; }

  BitVector message() const { return unframe_message(bits_); }

 private:
  BitVector bits_;
};

}  // namespace maskstego
