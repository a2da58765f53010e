#include "maskstego/bits.hpp"

#include <limits>

#include "maskstego/error.hpp"
#include "sodium_init.hpp"

namespace maskstego {

BitVector parse_bits(std::string_view zeros_and_ones) {
  BitVector out;
  out.reserve(zeros_and_ones.size());
  for (char c : zeros_and_ones) {
    if (c == '0' || c == '1') {
      out.push_back(c == '1');
    } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') {
      throw Error(ErrorKind::format, std::string("invalid bit character '") + c + "'");
    }
  }
  return out;
}

std::string format_bits(const BitVector& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitVector bits_from_bytes(std::span<const std::uint8_t> bytes) {
  BitVector out;
  out.reserve(bytes.size() * 8);
  for (auto byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) out.push_back(((byte >> shift) & 1U) != 0);
  }
  return out;
}

std::vector<std::uint8_t> bytes_from_bits(const BitVector& bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

std::string encode_hex(std::span<const std::uint8_t> bytes) {
  detail::ensure_sodium();
  std::string out(bytes.size() * 2 + 1, '\0');
  sodium_bin2hex(out.data(), out.size(), bytes.data(), bytes.size());
  out.pop_back();
  return out;
}

std::vector<std::uint8_t> decode_hex(std::string_view text) {
  detail::ensure_sodium();
  std::vector<std::uint8_t> out(text.size() / 2 + 1);
  std::size_t written = 0;
  const char* end = nullptr;
  if (sodium_hex2bin(out.data(), out.size(), text.data(), text.size(), " \t\r\n", &written, &end) !=
          0 ||
      end != text.data() + text.size()) {
    throw Error(ErrorKind::format, "malformed hex payload");
  }
  out.resize(written);
  return out;
}

std::string encode_base64(std::span<const std::uint8_t> bytes) {
  detail::ensure_sodium();
  constexpr int variant = sodium_base64_VARIANT_ORIGINAL;
  std::string out(sodium_base64_ENCODED_LEN(bytes.size(), variant), '\0');
  sodium_bin2base64(out.data(), out.size(), bytes.data(), bytes.size(), variant);
  out.pop_back();
  return out;
}

std::vector<std::uint8_t> decode_base64(std::string_view text) {
  detail::ensure_sodium();
  std::vector<std::uint8_t> out(text.size() / 4 * 3 + 3);
  std::size_t written = 0;
  const char* end = nullptr;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(), " \t\r\n", &written, &end,
                        sodium_base64_VARIANT_ORIGINAL) != 0 ||
      end != text.data() + text.size()) {
    throw Error(ErrorKind::format, "malformed base64 payload");
  }
  out.resize(written);
  return out;
}

BitVector frame_message(const BitVector& message) {
  if (message.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::capacity, "message longer than the 32-bit length header allows");
  }
  const auto length = static_cast<std::uint32_t>(message.size());
  BitVector out;
  out.reserve(kHeaderBits + message.size());
  for (int shift = 31; shift >= 0; --shift) out.push_back(((length >> shift) & 1U) != 0);
  out.insert(out.end(), message.begin(), message.end());
  return out;
}

namespace {

std::uint64_t read_header(const BitVector& bits) {
  std::uint64_t length = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i) length = (length << 1) | (bits[i] ? 1U : 0U);
  return length;
}

}  // namespace

BitVector unframe_message(const BitVector& framed) {
  if (framed.size() < kHeaderBits) {
    throw Error(ErrorKind::truncated_stream,
                "stream holds " + std::to_string(framed.size()) + " bits, header needs 32");
  }
  const std::uint64_t length = read_header(framed);
  if (framed.size() - kHeaderBits < length) {
    throw Error(ErrorKind::truncated_stream,
                "header announces " + std::to_string(length) + " bits, only " +
                    std::to_string(framed.size() - kHeaderBits) + " recovered");
  }
  const auto first = framed.begin() + static_cast<std::ptrdiff_t>(kHeaderBits);
  return BitVector(first, first + static_cast<std::ptrdiff_t>(length));
}

void FrameCollector::append(const BitVector& bits) { bits_.insert(bits_.end(), bits.begin(), bits.end()); }

std::optional<std::size_t> FrameCollector::expected_bits() const {
  if (bits_.size() < kHeaderBits) return std::nullopt;
  return kHeaderBits + static_cast<std::size_t>(read_header(bits_));
}

bool FrameCollector::complete() const {
  const auto expected = expected_bits();
  return expected && bits_.size() >= *expected;
}

}  // namespace maskstego
