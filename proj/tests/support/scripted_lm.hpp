#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maskstego/error.hpp"
#include "maskstego/lm.hpp"

namespace maskstego::testing {

/// Masked LM whose answers are looked up from a table keyed by the exact
/// temporary text and position. Unscripted queries are contract errors.
class ScriptedLM final : public MaskedLM {
 public:
  void script(const std::string& temporary, std::size_t position,
              std::vector<std::pair<std::string, double>> probs) {
    table_[key(temporary, position)] = std::move(probs);
  }

  PredictionDistribution predict(const TokenSequence& temporary, std::size_t position,
                                 double min_prob) const override {
    ++calls_;
    const auto it = table_.find(key(join_tokens(temporary), position));
    if (it == table_.end()) {
      throw Error(ErrorKind::contract, "unscripted query: " + join_tokens(temporary) + " @" +
                                           std::to_string(position));
    }
    std::vector<Prediction> entries;
    for (const auto& [surface, p] : it->second) {
      if (p >= min_prob) entries.push_back({Token(surface), p});
    }
    return PredictionDistribution(std::move(entries));
  }

  TokenSequence tokenize(std::string_view text) const override { return split_whitespace(text); }
  std::string model_digest() const override { return "scripted"; }

  std::size_t calls() const noexcept { return calls_; }

 private:
  static std::string key(const std::string& temporary, std::size_t position) {
    return temporary + "#" + std::to_string(position);
  }

  std::map<std::string, std::vector<std::pair<std::string, double>>> table_;
  mutable std::size_t calls_ = 0;
};

/// The Fig. 1 walkthrough: "is" keeps itself, "wonderful" picks among three
/// adjectives, "city" between "city" and "town".
inline ScriptedLM fig1_lm() {
  ScriptedLM lm;
  lm.script("Midshire [MASK] a [MASK] little [MASK] .", 1, {{"is", 0.92}, {"was", 0.05}, {"seems", 0.03}});
  lm.script("Midshire is a [MASK] little [MASK] .", 3,
            {{"nice", 0.5}, {"beautiful", 0.3}, {"lovely", 0.2}});
  for (const char* adjective : {"nice", "beautiful", "lovely", "wonderful"}) {
    lm.script(std::string("Midshire is a ") + adjective + " little [MASK] .", 5,
              {{"city", 0.55}, {"town", 0.45}});
  }
  return lm;
}

}  // namespace maskstego::testing
