#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maskstego/bits.hpp"
#include "maskstego/coding.hpp"
#include "maskstego/error.hpp"
#include "maskstego/key.hpp"
#include "maskstego/lm.hpp"
#include "maskstego/masking.hpp"

namespace maskstego {

/// autoregressive: step j sees the tokens chosen at steps < j.
/// parallel: every step sees the fully masked text (baseline behavior).
enum class PredictionMode { autoregressive, parallel };

/// length_prefixed: 32-bit header, zero padding, exact recovery.
/// none: raw bitstream; extraction returns every decoded bit (demo use only).
enum class Framing { length_prefixed, none };

std::string_view to_string(PredictionMode mode) noexcept;
PredictionMode parse_prediction_mode(std::string_view name);
std::string_view to_string(Framing framing) noexcept;
Framing parse_framing(std::string_view name);

struct StegoConfig {
  std::size_t interval = 3;
  double threshold = 0.02;
  SecretKey key;
  CoderKind coder = CoderKind::consistency;
  PredictionMode mode = PredictionMode::autoregressive;
  Framing framing = Framing::length_prefixed;

  /// Throws a config error unless interval >= 1 and threshold in [0, 1].
  void validate() const;
};

enum class FillKind {
  coded,          // codeword chosen from the stream
  single,         // one candidate, placed without carrying bits
  no_candidates,  // nothing above threshold, original word kept
  original,       // stream already exhausted, original word kept
};

std::string_view to_string(FillKind fill) noexcept;

struct PositionRecord {
  std::size_t index = 0;
  std::optional<std::size_t> candidates;  // unset when the LM was not consulted
  Token token;
  std::optional<BitVector> code;
  FillKind fill = FillKind::coded;
};

struct EmbedReport {
  std::vector<PositionRecord> positions;
  std::size_t bits_carried = 0;   // sum of placed code lengths, padding included
  std::size_t stream_bits = 0;    // framed stream length
  std::size_t stream_offset = 0;  // where this cover started in the stream
};

struct EmbedResult {
  TokenSequence stego;
  EmbedReport report;
};

/// Thrown when the covers run out of masked positions before the framed
/// stream is consumed. Carries everything embedded so far.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t consumed, std::size_t required, std::vector<EmbedResult> partial);

  std::size_t consumed() const noexcept { return consumed_; }
  std::size_t required() const noexcept { return required_; }
  const std::vector<EmbedResult>& partial() const noexcept { return partial_; }

 private:
  std::size_t consumed_;
  std::size_t required_;
  std::vector<EmbedResult> partial_;
};

/// Embeds stream[cursor..] into one cover as far as its masked positions
/// allow and advances the cursor. Never throws for lack of capacity.
EmbedResult embed_stream(const TokenSequence& cover, const BitVector& stream, std::size_t& cursor,
                         const StegoConfig& config, const MaskedLM& lm);

EmbedResult embed(const TokenSequence& cover, const BitVector& message, const StegoConfig& config,
                  const MaskedLM& lm);

BitVector extract(const TokenSequence& stego, const StegoConfig& config, const MaskedLM& lm);

/// Fills covers in order; later covers carry original words once the stream
/// is exhausted.
std::vector<EmbedResult> embed_many(const std::vector<TokenSequence>& covers,
                                    const BitVector& message, const StegoConfig& config,
                                    const MaskedLM& lm);

BitVector extract_many(const std::vector<TokenSequence>& stegos, const StegoConfig& config,
                       const MaskedLM& lm);

/// Renders the stego text with "word(a,b)" annotations on masked positions:
/// a = candidate count, b = carried bits or "-".
std::string annotate(const TokenSequence& stego, const EmbedReport& report);

}  // namespace maskstego
