#include "maskstego/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "maskstego/error.hpp"
#include "maskstego/masking.hpp"

namespace maskstego {

bool is_countable_word(const Token& token) {
  return !token.is_mask() && contains_alphanumeric(token.surface());
}

PayloadStats payload_bpw(const TokenSequence& text, std::size_t bits) {
  PayloadStats stats;
  stats.bits = bits;
  stats.countable_words =
      static_cast<std::size_t>(std::count_if(text.begin(), text.end(), is_countable_word));
  if (stats.countable_words == 0) {
    throw Error(ErrorKind::undefined_payload, "text has no countable words");
  }
  stats.bpw = static_cast<double>(bits) / static_cast<double>(stats.countable_words);
  return stats;
}

PerplexityResult pseudo_perplexity(const MaskedLM& lm, const TokenSequence& text) {
  if (text.empty()) throw Error(ErrorKind::contract, "pseudo-perplexity of an empty text");
  PerplexityResult result;
  double neg_log_sum = 0.0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_maskable(text[i])) continue;
    TokenSequence probe = text;
    probe[i] = Token::mask();
    const PredictionDistribution dist = lm.predict(probe, i, 0.0);
    double p = dist.probability_of(text[i]).value_or(0.0);
    if (p < kProbabilityFloor) {
      p = kProbabilityFloor;
      ++result.floored;
    }
    neg_log_sum -= std::log(p);
    ++result.evaluated;
  }
  if (result.evaluated == 0) {
    throw Error(ErrorKind::undefined_payload, "text has no maskable tokens to score");
  }
  result.value = std::exp(neg_log_sum / static_cast<double>(result.evaluated));
  return result;
}

}  // namespace maskstego
