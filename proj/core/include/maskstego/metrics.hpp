#pragma once

#include <cstddef>

#include "maskstego/lm.hpp"
#include "maskstego/text.hpp"

namespace maskstego {

/// Tokens with at least one letter or digit; punctuation never counts.
bool is_countable_word(const Token& token);

struct PayloadStats {
  std::size_t bits = 0;
  std::size_t countable_words = 0;
  double bpw = 0.0;
};

PayloadStats payload_bpw(const TokenSequence& text, std::size_t bits);

inline constexpr double kProbabilityFloor = 1e-12;

struct PerplexityResult {
  double value = 1.0;
  std::size_t evaluated = 0;  // maskable positions scored
  std::size_t floored = 0;    // positions whose token was missing from the distribution
};

/// exp of the mean negative log-probability of each maskable token with only
/// that token masked. Positions are scored independently.
PerplexityResult pseudo_perplexity(const MaskedLM& lm, const TokenSequence& text);

}  // namespace maskstego
