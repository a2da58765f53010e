#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "maskstego/lm.hpp"

namespace maskstego {

/// FNV-1a-64 over seed (8 bytes LE), the token surfaces joined by 0x1F,
/// a 0x1E separator and the decimal position.
std::uint64_t reference_context_hash(const TokenSequence& temporary, std::size_t position,
                                     std::uint64_t seed);

/// Full distribution in vocabulary order: w_i = splitmix64(h + i) mapped into
/// (0,1), p_i proportional to w_i^4.
std::vector<double> reference_probabilities(std::size_t vocab_size, const TokenSequence& temporary,
                                            std::size_t position, std::uint64_t seed);

PredictionDistribution reference_predict(std::span<const Token> vocab,
                                         const TokenSequence& temporary, std::size_t position,
                                         double min_prob, std::uint64_t seed);

/// Deterministic stand-in for a real masked LM. Vocabulary order is part of
/// the model identity: index i feeds the splitmix stream.
class ReferenceLM final : public MaskedLM {
 public:
  ReferenceLM(std::vector<Token> vocab, std::uint64_t seed);

  /// One token per line; blank lines and lines starting with '#' are skipped.
  static ReferenceLM from_vocab_file(const std::filesystem::path& path, std::uint64_t seed);

  PredictionDistribution predict(const TokenSequence& temporary, std::size_t position,
                                 double min_prob) const override;
  TokenSequence tokenize(std::string_view text) const override;
  std::string model_digest() const override;

  const std::vector<Token>& vocab() const noexcept { return vocab_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::vector<Token> vocab_;
  std::uint64_t seed_;
};

}  // namespace maskstego
