#include "maskstego/masking.hpp"

#include <array>
#include <cstdint>
#include <string_view>

#include "maskstego/error.hpp"

namespace maskstego {

namespace {

constexpr std::array<std::string_view, 5> kSpecialTokens = {"[CLS]", "[SEP]", "[MASK]", "[PAD]",
                                                            "[UNK]"};

// High 64 bits of the 128-bit product a * b.
std::uint64_t mul_high(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t a_lo = a & 0xFFFFFFFFU, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFU, b_hi = b >> 32;
  const std::uint64_t lo_lo = a_lo * b_lo;
  const std::uint64_t hi_lo = a_hi * b_lo;
  const std::uint64_t lo_hi = a_lo * b_hi;
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xFFFFFFFFU) + lo_hi;
  return a_hi * b_hi + (hi_lo >> 32) + (cross >> 32);
}

}  // namespace

bool is_maskable(const Token& token) {
  if (token.is_mask()) return false;
  const std::string& s = token.surface();
  for (auto special : kSpecialTokens) {
    if (s == special) return false;
  }
  if (s.starts_with("##")) return false;
  return contains_letter(s);
}

std::size_t mask_offset(const SecretKey& key, std::size_t interval) {
  if (interval == 0) throw Error(ErrorKind::config, "masking interval must be >= 1");
  // floor(u * interval) with u = hash / 2^64. The k-th selected rank,
  // offset + k * interval, then never decreases as the interval grows.
  return static_cast<std::size_t>(mul_high(key.keyed_u64("mask-offset", 0, 0), interval));
}

MaskPlan plan_masks(const TokenSequence& text, std::size_t interval, const SecretKey& key) {
  MaskPlan plan;
  plan.interval = interval;
  plan.offset = mask_offset(key, interval);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_maskable(text[i])) continue;
    if (rank % interval == plan.offset) plan.indices.push_back(i);
    ++rank;
  }
  return plan;
}

TokenSequence apply_masks(const TokenSequence& text, std::span<const std::size_t> subset) {
  TokenSequence out = text;
  for (auto index : subset) {
    if (index >= out.size()) {
      throw Error(ErrorKind::bounds, "mask index " + std::to_string(index) +
                                         " outside text of length " + std::to_string(out.size()));
    }
    out[index] = Token::mask();
  }
  return out;
}

TokenSequence temporary_text(const TokenSequence& work, const MaskPlan& plan, std::size_t step) {
  if (step >= plan.size()) {
    throw Error(ErrorKind::bounds, "step " + std::to_string(step) + " outside plan of size " +
                                       std::to_string(plan.size()));
  }
  const std::span<const std::size_t> remaining(plan.indices.begin() + static_cast<std::ptrdiff_t>(step),
                                               plan.indices.end());
  return apply_masks(work, remaining);
}

}  // namespace maskstego
