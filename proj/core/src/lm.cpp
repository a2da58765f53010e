#include "maskstego/lm.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "maskstego/error.hpp"

namespace maskstego {

bool canonical_before(const Prediction& lhs, const Prediction& rhs) noexcept {
  if (lhs.prob != rhs.prob) return lhs.prob > rhs.prob;
  return lhs.token.surface() < rhs.token.surface();
}

PredictionDistribution::PredictionDistribution(std::vector<Prediction> entries, double total_mass)
    : entries_(std::move(entries)), total_mass_(total_mass) {
  for (const auto& e : entries_) {
    if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
      throw Error(ErrorKind::protocol,
                  "probability out of range for token '" + e.token.surface() + "'");
    }
  }
  std::sort(entries_.begin(), entries_.end(), canonical_before);
  std::unordered_set<std::string_view> seen;
  seen.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!seen.insert(e.token.surface()).second) {
      throw Error(ErrorKind::protocol, "duplicate token '" + e.token.surface() + "'");
    }
  }
}

std::optional<double> PredictionDistribution::probability_of(const Token& token) const {
  for (const auto& e : entries_) {
    if (e.token == token) return e.prob;
  }
  return std::nullopt;
}

}  // namespace maskstego
