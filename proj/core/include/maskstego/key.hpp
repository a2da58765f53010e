#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maskstego {

/// Shared secret between embedder and extractor. Everything derived from it
/// (mask offset, Huffman label swaps) goes through keyed_u64.
class SecretKey {
 public:
  static constexpr std::size_t kMinBytes = 16;

  explicit SecretKey(std::vector<std::uint8_t> bytes);
  static SecretKey from_string(std::string_view bytes);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  /// Keyed BLAKE2b over (label, 0x00, a, b); first eight output bytes read
  /// little-endian.
  std::uint64_t keyed_u64(std::string_view label, std::uint64_t a, std::uint64_t b) const;

  /// Non-reversible identifier safe to print in verbose output.
  std::string fingerprint() const;

  friend bool operator==(const SecretKey& lhs, const SecretKey& rhs) noexcept {
    return lhs.bytes_ == rhs.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::array<std::uint8_t, 64> mac_key_{};
  std::size_t mac_key_size_ = 0;
};

}  // namespace maskstego
