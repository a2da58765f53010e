#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maskstego/text.hpp"

namespace maskstego {

struct Prediction {
  Token token;
  double prob = 0.0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Canonical order: probability descending, then surface bytes ascending.
bool canonical_before(const Prediction& lhs, const Prediction& rhs) noexcept;

/// Truncated masked-LM output at one position, always held in canonical order.
class PredictionDistribution {
 public:
  PredictionDistribution() = default;
  /// Sorts into canonical order; throws on duplicate tokens or probabilities
  /// outside [0, 1].
  explicit PredictionDistribution(std::vector<Prediction> entries, double total_mass = 1.0);

  const std::vector<Prediction>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Mass of the full (untruncated) distribution as reported by the model.
  double total_mass() const noexcept { return total_mass_; }

  std::optional<double> probability_of(const Token& token) const;

  friend bool operator==(const PredictionDistribution&, const PredictionDistribution&) = default;

 private:
  std::vector<Prediction> entries_;
  double total_mass_ = 1.0;
};

/// Behavioral contract for any masked language model backend. Implementations
/// must be deterministic: identical inputs give identical outputs, in every
/// process that loads the same model.
class MaskedLM {
 public:
  virtual ~MaskedLM() = default;

  /// Distribution over the vocabulary for the masked slot at `position`
  /// (0-based), truncated to entries with probability >= min_prob.
  virtual PredictionDistribution predict(const TokenSequence& temporary, std::size_t position,
                                         double min_prob) const = 0;

  virtual TokenSequence tokenize(std::string_view text) const = 0;

  /// Identifies model weights and runtime; both parties must see equal values.
  virtual std::string model_digest() const = 0;
};

}  // namespace maskstego
