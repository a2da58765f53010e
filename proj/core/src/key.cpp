#include "maskstego/key.hpp"

#include <algorithm>

#include "maskstego/error.hpp"
#include "sodium_init.hpp"

namespace maskstego {

SecretKey::SecretKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < kMinBytes) {
    throw Error(ErrorKind::config, "secret key must hold at least 16 bytes, got " +
                                       std::to_string(bytes_.size()));
  }
  detail::ensure_sodium();
  if (bytes_.size() <= crypto_generichash_KEYBYTES_MAX) {
    std::copy(bytes_.begin(), bytes_.end(), mac_key_.begin());
    mac_key_size_ = bytes_.size();
  } else {
    crypto_generichash(mac_key_.data(), mac_key_.size(), bytes_.data(), bytes_.size(), nullptr, 0);
    mac_key_size_ = mac_key_.size();
  }
}

SecretKey SecretKey::from_string(std::string_view bytes) {
  return SecretKey(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

std::uint64_t SecretKey::keyed_u64(std::string_view label, std::uint64_t a,
                                   std::uint64_t b) const {
  std::vector<std::uint8_t> message(label.begin(), label.end());
  message.push_back(0x00);
  for (int i = 0; i < 8; ++i) message.push_back(static_cast<std::uint8_t>(a >> (8 * i)));
  for (int i = 0; i < 8; ++i) message.push_back(static_cast<std::uint8_t>(b >> (8 * i)));

  std::array<std::uint8_t, crypto_generichash_BYTES_MIN> out{};
  crypto_generichash(out.data(), out.size(), message.data(), message.size(), mac_key_.data(),
                     mac_key_size_);
  std::uint64_t value = 0;
  for (int i = 7; i >= 0; --i) value = (value << 8) | out[static_cast<std::size_t>(i)];
  return value;
}

std::string SecretKey::fingerprint() const {
  const std::uint64_t v = keyed_u64("fingerprint", 0, 0);
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[15 - i] = digits[(v >> (4 * i)) & 0xF];
  return out;
}

}  // namespace maskstego
