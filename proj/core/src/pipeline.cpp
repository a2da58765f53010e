#include "maskstego/pipeline.hpp"

#include <map>

namespace maskstego {

std::string_view to_string(PredictionMode mode) noexcept {
  return mode == PredictionMode::autoregressive ? "auto" : "parallel";
}

PredictionMode parse_prediction_mode(std::string_view name) {
  if (name == "auto" || name == "autoregressive") return PredictionMode::autoregressive;
  if (name == "parallel") return PredictionMode::parallel;
  throw Error(ErrorKind::config, "unknown prediction mode '" + std::string(name) + "'");
}

std::string_view to_string(Framing framing) noexcept {
  return framing == Framing::length_prefixed ? "length" : "none";
}

Framing parse_framing(std::string_view name) {
  if (name == "length") return Framing::length_prefixed;
  if (name == "none") return Framing::none;
  throw Error(ErrorKind::config, "unknown framing '" + std::string(name) + "'");
}

std::string_view to_string(FillKind fill) noexcept {
  switch (fill) {
    case FillKind::coded: return "coded";
    case FillKind::single: return "single";
    case FillKind::no_candidates: return "no-candidates";
    case FillKind::original: return "original";
  }
  return "unknown";
}

void StegoConfig::validate() const {
  if (interval < 1) throw Error(ErrorKind::config, "masking interval f must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::config, "threshold t_p must lie in [0, 1]");
  }
}

CapacityError::CapacityError(std::size_t consumed, std::size_t required,
                             std::vector<EmbedResult> partial)
    : Error(ErrorKind::capacity, "insufficient capacity: embedded " + std::to_string(consumed) +
                                     " of " + std::to_string(required) + " stream bits"),
      consumed_(consumed),
      required_(required),
      partial_(std::move(partial)) {}

namespace {

void require_text(const TokenSequence& text) {
  if (text.empty()) throw Error(ErrorKind::contract, "text must contain at least one token");
}

CandidateSet candidates_at(const TokenSequence& work, const TokenSequence& masked_all,
                           const MaskPlan& plan, std::size_t step, const StegoConfig& config,
                           const MaskedLM& lm) {
  const std::size_t index = plan.indices[step];
  const PredictionDistribution dist =
      config.mode == PredictionMode::autoregressive
          ? lm.predict(temporary_text(work, plan, step), index, config.threshold)
          : lm.predict(masked_all, index, config.threshold);
  return select_candidates(dist, config.threshold);
}

// Tracks how many stream bits the extractor still expects.
class StreamReader {
 public:
  explicit StreamReader(Framing framing) : framing_(framing) {}

  bool owed() const {
    return framing_ == Framing::length_prefixed ? !collector_.complete() : !ended_;
  }

  void append(const BitVector& bits) { collector_.append(bits); }

  void observe_unknown(const Token& observed) {
    if (framing_ == Framing::none) {
      ended_ = true;
      return;
    }
    throw Error(ErrorKind::desync, "token '" + observed.surface() +
                                       "' at a coded position is outside the rebuilt codebook "
                                       "while message bits are still owed");
  }

  BitVector finish() const {
    return framing_ == Framing::length_prefixed ? collector_.message() : collector_.bits();
  }

 private:
  Framing framing_;
  FrameCollector collector_;
  bool ended_ = false;
};

void extract_into(const TokenSequence& stego, const StegoConfig& config, const MaskedLM& lm,
                  StreamReader& reader) {
  require_text(stego);
  const MaskPlan plan = plan_masks(stego, config.interval, config.key);
  TokenSequence work = apply_masks(stego, plan.indices);
  const TokenSequence masked_all = work;

  for (std::size_t j = 0; j < plan.size() && reader.owed(); ++j) {
    const std::size_t index = plan.indices[j];
    const Token& observed = stego[index];
    const CandidateSet cands = candidates_at(work, masked_all, plan, j, config, lm);
    if (cands.size() >= 2) {
      const CodeBook book = build_codebook(config.coder, cands, config.key, index);
      if (const CodeWord* word = book.find(observed)) {
        reader.append(word->code);
      } else {
        reader.observe_unknown(observed);
      }
    }
    work[index] = observed;
  }
}

}  // namespace

EmbedResult embed_stream(const TokenSequence& cover, const BitVector& stream, std::size_t& cursor,
                         const StegoConfig& config, const MaskedLM& lm) {
  config.validate();
  require_text(cover);
  const MaskPlan plan = plan_masks(cover, config.interval, config.key);

  EmbedResult result;
  result.stego = apply_masks(cover, plan.indices);
  result.report.stream_bits = stream.size();
  result.report.stream_offset = cursor;
  const TokenSequence masked_all = result.stego;
  TokenSequence& work = result.stego;

  for (std::size_t j = 0; j < plan.size(); ++j) {
    const std::size_t index = plan.indices[j];
    PositionRecord record{.index = index,
                          .candidates = std::nullopt,
                          .token = cover[index],
                          .code = std::nullopt,
                          .fill = FillKind::original};

    if (cursor >= stream.size()) {
      record.fill = FillKind::original;
    } else {
      const CandidateSet cands = candidates_at(work, masked_all, plan, j, config, lm);
      record.candidates = cands.size();
      if (cands.empty()) {
        record.fill = FillKind::no_candidates;
      } else if (cands.size() == 1) {
        record.fill = FillKind::single;
        record.token = cands.entries.front().token;
      } else {
        const CodeBook book = build_codebook(config.coder, cands, config.key, index);
        const EncodedStep step = encode_step(book, stream, cursor);
        cursor += step.consumed;
        result.report.bits_carried += step.consumed;
        record.fill = FillKind::coded;
        record.token = step.word->token;
        record.code = step.word->code;
      }
    }
    work[index] = record.token;
    result.report.positions.push_back(std::move(record));
  }
  return result;
}

EmbedResult embed(const TokenSequence& cover, const BitVector& message, const StegoConfig& config,
                  const MaskedLM& lm) {
  const BitVector stream =
      config.framing == Framing::length_prefixed ? frame_message(message) : message;
  std::size_t cursor = 0;
  EmbedResult result = embed_stream(cover, stream, cursor, config, lm);
  if (cursor < stream.size()) {
    std::vector<EmbedResult> partial;
    partial.push_back(std::move(result));
    throw CapacityError(cursor, stream.size(), std::move(partial));
  }
  return result;
}

BitVector extract(const TokenSequence& stego, const StegoConfig& config, const MaskedLM& lm) {
  config.validate();
  StreamReader reader(config.framing);
  extract_into(stego, config, lm, reader);
  return reader.finish();
}

std::vector<EmbedResult> embed_many(const std::vector<TokenSequence>& covers,
                                    const BitVector& message, const StegoConfig& config,
                                    const MaskedLM& lm) {
  const BitVector stream =
      config.framing == Framing::length_prefixed ? frame_message(message) : message;
  std::size_t cursor = 0;
  std::vector<EmbedResult> results;
  results.reserve(covers.size());
  for (const auto& cover : covers) results.push_back(embed_stream(cover, stream, cursor, config, lm));
  if (cursor < stream.size() || (covers.empty() && !stream.empty())) {
    throw CapacityError(cursor, stream.size(), std::move(results));
  }
  return results;
}

BitVector extract_many(const std::vector<TokenSequence>& stegos, const StegoConfig& config,
                       const MaskedLM& lm) {
  config.validate();
  StreamReader reader(config.framing);
  for (const auto& stego : stegos) {
    if (!reader.owed()) break;
    extract_into(stego, config, lm, reader);
  }
  return reader.finish();
}

std::string annotate(const TokenSequence& stego, const EmbedReport& report) {
  std::map<std::size_t, const PositionRecord*> by_index;
  for (const auto& r : report.positions) by_index.emplace(r.index, &r);

  std::string out;
  for (std::size_t i = 0; i < stego.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += stego[i].surface();
    const auto it = by_index.find(i);
    if (it == by_index.end() || !it->second->candidates) continue;
    const PositionRecord& r = *it->second;
    out += "(" + std::to_string(*r.candidates) + "," + (r.code ? format_bits(*r.code) : "-") + ")";
  }
  return out;
}

}  // namespace maskstego
