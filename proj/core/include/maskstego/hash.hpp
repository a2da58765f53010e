#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace maskstego {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

class Fnv1a64 {
 public:
  Fnv1a64& update(std::span<const std::uint8_t> bytes) noexcept;
  Fnv1a64& update(std::string_view bytes) noexcept;
  Fnv1a64& update(std::uint8_t byte) noexcept;
  /// Little-endian, eight bytes.
  Fnv1a64& update_u64(std::uint64_t value) noexcept;

  std::uint64_t digest() const noexcept { return state_; }

 private:
  std::uint64_t state_ = kFnvOffsetBasis;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Maps a 64-bit word into the open interval (0, 1) using its top 52 bits.
/// (With 53 bits the largest value would round up to exactly 1.)
constexpr double unit_open_interval(std::uint64_t z) noexcept {
  return (static_cast<double>(z >> 12) + 0.5) * 0x1.0p-52;
}

}  // namespace maskstego
