#include "maskstego/reference_lm.hpp"

#include <fstream>
#include <set>
#include <string>

#include "maskstego/error.hpp"
#include "maskstego/hash.hpp"
#include "maskstego/masking.hpp"

namespace maskstego {

std::uint64_t reference_context_hash(const TokenSequence& temporary, std::size_t position,
                                     std::uint64_t seed) {
  Fnv1a64 h;
  h.update_u64(seed);
  for (std::size_t i = 0; i < temporary.size(); ++i) {
    if (i != 0) h.update(std::uint8_t{0x1F});
    h.update(std::string_view(temporary[i].surface()));
  }
  h.update(std::uint8_t{0x1E});
  h.update(std::string_view(std::to_string(position)));
  return h.digest();
}

std::vector<double> reference_probabilities(std::size_t vocab_size, const TokenSequence& temporary,
                                            std::size_t position, std::uint64_t seed) {
  if (vocab_size == 0) throw Error(ErrorKind::contract, "reference LM needs a non-empty vocabulary");
  if (position >= temporary.size() || !temporary[position].is_mask()) {
    throw Error(ErrorKind::contract,
                "position " + std::to_string(position) + " does not hold the mask sentinel");
  }
  const std::uint64_t h = reference_context_hash(temporary, position, seed);
  std::vector<double> probs(vocab_size);
  double total = 0.0;
  for (std::size_t i = 0; i < vocab_size; ++i) {
    const double w = unit_open_interval(splitmix64(h + i));
    const double w2 = w * w;
    probs[i] = w2 * w2;
    total += probs[i];
  }
  for (auto& p : probs) p /= total;
  return probs;
}

PredictionDistribution reference_predict(std::span<const Token> vocab,
                                         const TokenSequence& temporary, std::size_t position,
                                         double min_prob, std::uint64_t seed) {
  const auto probs = reference_probabilities(vocab.size(), temporary, position, seed);
  std::vector<Prediction> entries;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (probs[i] >= min_prob) entries.push_back({vocab[i], probs[i]});
  }
  return PredictionDistribution(std::move(entries), 1.0);
}

ReferenceLM::ReferenceLM(std::vector<Token> vocab, std::uint64_t seed)
    : vocab_(std::move(vocab)), seed_(seed) {
  if (vocab_.empty()) throw Error(ErrorKind::config, "reference LM vocabulary is empty");
  std::set<std::string> seen;
  for (const auto& t : vocab_) {
    if (!is_maskable(t)) {
      throw Error(ErrorKind::config, "vocabulary token '" + t.surface() + "' is not maskable");
    }
    if (!seen.insert(t.surface()).second) {
      throw Error(ErrorKind::config, "duplicate vocabulary token '" + t.surface() + "'");
    }
  }
}

ReferenceLM ReferenceLM::from_vocab_file(const std::filesystem::path& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open vocabulary file " + path.string());
  std::vector<Token> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    vocab.emplace_back(line);
  }
  return ReferenceLM(std::move(vocab), seed);
}

PredictionDistribution ReferenceLM::predict(const TokenSequence& temporary, std::size_t position,
                                            double min_prob) const {
  return reference_predict(vocab_, temporary, position, min_prob, seed_);
}

TokenSequence ReferenceLM::tokenize(std::string_view text) const { return split_whitespace(text); }

std::string ReferenceLM::model_digest() const {
  Fnv1a64 h;
  h.update_u64(seed_);
  for (const auto& t : vocab_) {
    h.update(std::string_view(t.surface()));
    h.update(std::uint8_t{0x0A});
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 0; i < 16; ++i) hex[15 - i] = digits[(h.digest() >> (4 * i)) & 0xF];
  return "reference-fnv1a-splitmix-v1:" + hex;
}

}  // namespace maskstego
