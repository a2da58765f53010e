#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maskstego/key.hpp"
#include "maskstego/text.hpp"

namespace maskstego {

/// True iff the token carries a letter, is not a special token
/// ([CLS] [SEP] [MASK] [PAD] [UNK] or the sentinel) and is not a "##"
/// subword continuation. Both parties must agree on this bit-for-bit.
bool is_maskable(const Token& token);

/// Positions (0-based) chosen for embedding. Among maskable positions, the
/// r-th one (0-based rank) is selected iff r mod interval == offset.
struct MaskPlan {
  std::vector<std::size_t> indices;
  std::size_t interval = 1;
  std::size_t offset = 0;

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }

  friend bool operator==(const MaskPlan&, const MaskPlan&) = default;
};

/// Key-derived offset in [0, interval): floor(keyed hash * interval / 2^64).
std::size_t mask_offset(const SecretKey& key, std::size_t interval);

MaskPlan plan_masks(const TokenSequence& text, std::size_t interval, const SecretKey& key);

/// Replaces every index in `subset` with the mask sentinel.
TokenSequence apply_masks(const TokenSequence& text, std::span<const std::size_t> subset);

/// Text fed to the LM at step `step` (0-based): slots of earlier steps keep
/// whatever `work` holds, this slot and every later one are masked.
TokenSequence temporary_text(const TokenSequence& work, const MaskPlan& plan, std::size_t step);

}  // namespace maskstego
