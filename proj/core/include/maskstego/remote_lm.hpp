#pragma once

#include <chrono>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>

#include "maskstego/lm.hpp"

namespace maskstego {

struct RemoteOptions {
  std::chrono::milliseconds timeout{30000};
  /// Attempts per request when the transport fails; protocol errors are not retried.
  int attempts = 3;
  /// Probability mass tolerance for the reported total_mass field.
  double mass_tolerance = 1e-4;
};

/// Client for the masked-LM inference service.
///
///   POST /v1/tokenize {"text": s}                         -> {"tokens": [...]}
///   POST /v1/predict  {"tokens", "mask_index", "min_prob"} -> {"entries", "total_mass", "model_digest"}
///   GET  /v1/health                                       -> {"model_digest": ...}
///
/// Probabilities travel as decimal strings. Every reply's model_digest must
/// match the first one this client saw; a change raises a determinism error.
class RemoteLM final : public MaskedLM {
 public:
  explicit RemoteLM(std::string endpoint, RemoteOptions options = {});

  PredictionDistribution predict(const TokenSequence& temporary, std::size_t position,
                                 double min_prob) const override;
  TokenSequence tokenize(std::string_view text) const override;
  std::string model_digest() const override;

  /// Sends one fixed predict request twice and compares the reply bodies.
  /// Throws a determinism error if they differ.
  void probe() const;

  const std::string& endpoint() const noexcept { return endpoint_; }

 private:
  std::string post(const std::string& path, const std::string& body) const;
  std::string get(const std::string& path) const;
  void observe_digest(const std::string& digest) const;

  std::string endpoint_;
  RemoteOptions options_;
  mutable std::mutex mutex_;
  mutable std::optional<std::string> digest_;
};

/// Decimal string for a probability, 17 significant digits (round-trips a double).
std::string format_probability(double value);
double parse_probability(std::string_view text);

}  // namespace maskstego
