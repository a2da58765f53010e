#include "maskstego/hash.hpp"

namespace maskstego {

Fnv1a64& Fnv1a64::update(std::uint8_t byte) noexcept {
  state_ ^= byte;
  state_ *= kFnvPrime;
  return *this;
}

Fnv1a64& Fnv1a64::update(std::span<const std::uint8_t> bytes) noexcept {
  for (auto b : bytes) update(b);
  return *this;
}

Fnv1a64& Fnv1a64::update(std::string_view bytes) noexcept {
  for (char c : bytes) update(static_cast<std::uint8_t>(c));
  return *this;
}

Fnv1a64& Fnv1a64::update_u64(std::uint64_t value) noexcept {
  for (int i = 0; i < 8; ++i) update(static_cast<std::uint8_t>(value >> (8 * i)));
  return *this;
}

}  // namespace maskstego
