#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maskstego/bits.hpp"
#include "maskstego/coding.hpp"
#include "maskstego/key.hpp"
#include "maskstego/masking.hpp"
#include "maskstego/metrics.hpp"
#include "maskstego/pipeline.hpp"
#include "maskstego/reference_lm.hpp"
#include "maskstego/remote_lm.hpp"
#include "maskstego/text.hpp"

namespace maskstego::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr std::size_t kMinBenchWords = 20;

struct Settings {
  std::size_t interval = 3;
  double threshold = 0.02;
  std::string coder = "consistency";
  std::string mode = "auto";
  std::string framing = "length";
  std::string lm = "reference";
  std::string endpoint;
  std::string vocab;
  std::uint64_t seed = 42;
  std::string key_file;
  std::string key_env;
  std::string payload_enc = "hex";
  bool verbose = false;
};

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
}

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

SecretKey load_key(const Settings& s) {
  if (!s.key_file.empty() && !s.key_env.empty()) {
    throw Error(ErrorKind::config, "give only one of --key-file and --key-env");
  }
  if (!s.key_file.empty()) {
    std::string bytes = read_file(s.key_file);
    if (bytes.ends_with('\n')) bytes.pop_back();
    if (bytes.ends_with('\r')) bytes.pop_back();
    return SecretKey::from_string(bytes);
  }
  if (!s.key_env.empty()) {
    const char* value = std::getenv(s.key_env.c_str());
    if (value == nullptr) throw Error(ErrorKind::config, "environment variable " + s.key_env + " is not set");
    return SecretKey::from_string(value);
  }
  throw Error(ErrorKind::config, "a key is required: use --key-file or --key-env");
}

StegoConfig make_config(const Settings& s) {
  StegoConfig config{.interval = s.interval,
                     .threshold = s.threshold,
                     .key = load_key(s),
                     .coder = parse_coder_kind(s.coder),
                     .mode = parse_prediction_mode(s.mode),
                     .framing = parse_framing(s.framing)};
  config.validate();
  if (config.framing == Framing::none && s.payload_enc != "bits") {
    throw Error(ErrorKind::config, "--framing none requires --payload-enc bits");
  }
  return config;
}

std::unique_ptr<MaskedLM> make_lm(const Settings& s) {
  if (s.lm == "reference") {
    if (s.vocab.empty()) throw Error(ErrorKind::config, "--lm reference requires --vocab");
    return std::make_unique<ReferenceLM>(ReferenceLM::from_vocab_file(s.vocab, s.seed));
  }
  if (s.lm == "remote") {
    if (s.endpoint.empty()) throw Error(ErrorKind::config, "--lm remote requires --endpoint");
    return std::make_unique<RemoteLM>(s.endpoint);
  }
  throw Error(ErrorKind::config, "unknown LM backend: " + s.lm);
}

BitVector decode_payload(std::string_view text, std::string_view encoding) {
  const std::string compact = strip_whitespace(text);
  if (encoding == "bits") return parse_bits(compact);
  if (encoding == "hex") return bits_from_bytes(decode_hex(compact));
  if (encoding == "base64") return bits_from_bytes(decode_base64(compact));
  throw Error(ErrorKind::config, "unknown payload encoding: " + std::string(encoding));
}

std::string encode_payload(const BitVector& bits, std::string_view encoding) {
  if (encoding == "bits") return format_bits(bits);
  if (bits.size() % 8 != 0) {
    throw Error(ErrorKind::format, "recovered " + std::to_string(bits.size()) + " bits, not whole bytes");
  }
  const auto bytes = bytes_from_bits(bits);
  if (encoding == "hex") return encode_hex(bytes);
  if (encoding == "base64") return encode_base64(bytes);
  throw Error(ErrorKind::config, "unknown payload encoding: " + std::string(encoding));
}

ordered_json settings_json(const Settings& s) {
  ordered_json j;
  j["f"] = s.interval;
  j["tp"] = s.threshold;
  j["coder"] = s.coder;
  j["mode"] = s.mode;
  j["framing"] = s.framing;
  j["lm"] = s.lm;
  if (s.lm == "reference") {
    j["vocab"] = s.vocab;
    j["seed"] = s.seed;
  } else {
    j["endpoint"] = s.endpoint;
  }
  j["payload-enc"] = s.payload_enc;
  return j;
}

/// Echoed in config-file syntax so a run can be replayed from it.
void echo_settings(const Settings& s, const SecretKey& key, const MaskedLM& lm, std::ostream& err) {
  err << "f=" << s.interval << '\n'
      << "tp=" << shortest(s.threshold) << '\n'
      << "coder=" << s.coder << '\n'
      << "mode=" << s.mode << '\n'
      << "framing=" << s.framing << '\n'
      << "lm=" << s.lm << '\n';
  if (s.lm == "reference") {
    err << "vocab=" << s.vocab << '\n' << "seed=" << s.seed << '\n';
  } else {
    err << "endpoint=" << s.endpoint << '\n';
  }
  if (!s.key_file.empty()) err << "key-file=" << s.key_file << '\n';
  if (!s.key_env.empty()) err << "key-env=" << s.key_env << '\n';
  err << "payload-enc=" << s.payload_enc << '\n'
      << "# key-fingerprint=" << key.fingerprint() << '\n'
      << "# model-digest=" << lm.model_digest() << '\n';
}

double round2(double value) { return std::round(value * 100.0) / 100.0; }

ordered_json positions_json(const EmbedReport& report) {
  ordered_json list = ordered_json::array();
  for (const auto& p : report.positions) {
    ordered_json r;
    r["index"] = p.index;
    r["candidates"] = p.candidates ? ordered_json(*p.candidates) : ordered_json(nullptr);
    r["token"] = p.token.surface();
    r["code"] = p.code ? ordered_json(format_bits(*p.code)) : ordered_json(nullptr);
    r["fill"] = to_string(p.fill);
    list.push_back(std::move(r));
  }
  return list;
}

void emit(const ordered_json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct EmbedArgs {
  std::string cover;
  std::string payload;
  std::string out;
  std::string report;
};

int cmd_embed(const Settings& s, const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  const StegoConfig config = make_config(s);
  const auto lm = make_lm(s);
  if (s.verbose) echo_settings(s, config.key, *lm, err);
  const TokenSequence cover = lm->tokenize(read_file(a.cover));
  const BitVector message = decode_payload(read_file(a.payload), s.payload_enc);

  ordered_json report;
  report["command"] = "embed";
  report["config"] = settings_json(s);
  report["key_fingerprint"] = config.key.fingerprint();
  report["model_digest"] = lm->model_digest();
  report["payload_bits"] = message.size();

  const auto describe = [&](const EmbedResult& result) {
    report["stream_bits"] = result.report.stream_bits;
    report["bits_carried"] = result.report.bits_carried;
    report["stego"] = join_tokens(result.stego);
    report["annotated"] = annotate(result.stego, result.report);
    report["positions"] = positions_json(result.report);
    const auto words = static_cast<std::size_t>(std::count_if(
        result.stego.begin(), result.stego.end(), [](const Token& t) { return is_countable_word(t); }));
    report["countable_words"] = words;
    if (words > 0) {
      report["bpw"] = round2(payload_bpw(result.stego, result.report.bits_carried).bpw);
    } else {
      report["bpw"] = nullptr;
    }
  };

  try {
    const EmbedResult result = embed(cover, message, config, *lm);
    report["status"] = "ok";
    describe(result);
    write_file(a.out, join_tokens(result.stego) + "\n");
    emit(report, a.report, out);
    return kExitOk;
  } catch (const CapacityError& e) {
    report["status"] = "capacity";
    report["bits_consumed"] = e.consumed();
    report["bits_required"] = e.required();
    if (!e.partial().empty()) describe(e.partial().front());
    emit(report, a.report, out);
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  }
}

struct ExtractArgs {
  std::string stego;
  std::string out;
  std::string report;
};

int cmd_extract(const Settings& s, const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  const StegoConfig config = make_config(s);
  const auto lm = make_lm(s);
  if (s.verbose) echo_settings(s, config.key, *lm, err);
  const TokenSequence stego = lm->tokenize(read_file(a.stego));
  const BitVector message = extract(stego, config, *lm);
  write_file(a.out, encode_payload(message, s.payload_enc) + "\n");

  ordered_json report;
  report["command"] = "extract";
  report["config"] = settings_json(s);
  report["key_fingerprint"] = config.key.fingerprint();
  report["model_digest"] = lm->model_digest();
  report["status"] = "ok";
  report["payload_bits"] = message.size();
  emit(report, a.report, out);
  return kExitOk;
}

/// Masked positions of a text with their candidate sets and codebooks, each
/// predicted from the temporary text an extractor would build from it.
int cmd_inspect(const Settings& s, const std::string& text_path, std::ostream& out, std::ostream& err) {
  const StegoConfig config = make_config(s);
  const auto lm = make_lm(s);
  if (s.verbose) echo_settings(s, config.key, *lm, err);
  const TokenSequence text = lm->tokenize(read_file(text_path));
  const MaskPlan plan = plan_masks(text, config.interval, config.key);
  const TokenSequence masked = apply_masks(text, plan.indices);

  ordered_json report;
  report["command"] = "inspect";
  report["config"] = settings_json(s);
  report["key_fingerprint"] = config.key.fingerprint();
  report["model_digest"] = lm->model_digest();
  report["tokens"] = text.size();
  report["maskable"] = std::count_if(text.begin(), text.end(), [](const Token& t) { return is_maskable(t); });
  report["offset"] = plan.offset;
  report["masked"] = plan.indices;
  ordered_json positions = ordered_json::array();
  for (std::size_t step = 0; step < plan.size(); ++step) {
    const std::size_t index = plan.indices[step];
    const TokenSequence context =
        config.mode == PredictionMode::autoregressive ? temporary_text(text, plan, step) : masked;
    const CandidateSet cands = select_candidates(lm->predict(context, index, config.threshold), config.threshold);
    ordered_json p;
    p["index"] = index;
    p["original"] = text[index].surface();
    ordered_json list = ordered_json::array();
    std::optional<CodeBook> book;
    if (cands.entries.size() >= 2) book = build_codebook(config.coder, cands, config.key, index);
    for (const auto& c : cands.entries) {
      ordered_json e;
      e["token"] = c.token.surface();
      e["prob"] = c.prob;
      const CodeWord* word = book ? book->find(c.token) : nullptr;
      e["code"] = word ? ordered_json(format_bits(word->code)) : ordered_json(nullptr);
      list.push_back(std::move(e));
    }
    p["candidates"] = std::move(list);
    positions.push_back(std::move(p));
  }
  report["positions"] = std::move(positions);
  out << report.dump(2) << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string corpus;
  std::vector<std::size_t> intervals{2, 3, 4};
  std::vector<double> thresholds;
  std::vector<std::string> coders{"consistency", "block"};
  std::vector<std::string> modes{"auto", "parallel"};
  std::uint64_t bits_seed = 1;
  std::string format = "table";
};

struct BenchText {
  std::string name;
  TokenSequence tokens;
  BitVector bits;
};

std::vector<BenchText> load_corpus(const BenchArgs& a, const MaskedLM& lm, std::ostream& err) {
  if (!fs::is_directory(a.corpus)) throw Error(ErrorKind::io, "not a directory: " + a.corpus);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchText> texts;
  for (std::size_t i = 0; i < files.size(); ++i) {
    TokenSequence tokens = lm.tokenize(read_file(files[i]));
    const auto words = static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return is_countable_word(t); }));
    if (words < kMinBenchWords) {
      err << "warning: skipping " << files[i].filename().string() << " (" << words << " countable words)\n";
      continue;
    }
    // Same random stream for every grid cell; long enough to outlast any cover.
    std::seed_seq seq{a.bits_seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    BitVector bits(tokens.size() * 64);
    for (std::size_t b = 0; b < bits.size(); ++b) bits[b] = (rng() & 1) != 0;
    texts.push_back({files[i].filename().string(), std::move(tokens), std::move(bits)});
  }
  if (texts.empty()) throw Error(ErrorKind::config, "no usable texts in " + a.corpus);
  return texts;
}

int cmd_bench(const Settings& s, BenchArgs a, std::ostream& out, std::ostream& err) {
  const SecretKey key = load_key(s);
  const auto lm = make_lm(s);
  if (s.verbose) echo_settings(s, key, *lm, err);
  if (a.thresholds.empty()) a.thresholds.push_back(s.threshold);
  const auto texts = load_corpus(a, *lm, err);

  ordered_json rows = ordered_json::array();
  for (const double tp : a.thresholds) {
    for (const std::size_t f : a.intervals) {
      for (const auto& coder : a.coders) {
        for (const auto& mode : a.modes) {
          StegoConfig config{.interval = f,
                             .threshold = tp,
                             .key = key,
                             .coder = parse_coder_kind(coder),
                             .mode = parse_prediction_mode(mode),
                             .framing = Framing::none};
          config.validate();
          double bpw_sum = 0.0;
          double ppl_sum = 0.0;
          for (const auto& text : texts) {
            std::size_t cursor = 0;
            const EmbedResult result = embed_stream(text.tokens, text.bits, cursor, config, *lm);
            bpw_sum += payload_bpw(result.stego, result.report.bits_carried).bpw;
            ppl_sum += pseudo_perplexity(*lm, result.stego).value;
          }
          ordered_json row;
          row["f"] = f;
          row["tp"] = tp;
          row["coder"] = coder;
          row["mode"] = mode;
          row["texts"] = texts.size();
          row["mean_bpw"] = bpw_sum / static_cast<double>(texts.size());
          row["mean_ppl"] = ppl_sum / static_cast<double>(texts.size());
          rows.push_back(std::move(row));
        }
      }
    }
  }

  if (a.format == "json") {
    out << rows.dump(2) << '\n';
    return kExitOk;
  }
  std::ostringstream table;
  table.setf(std::ios::fixed);
  table << "f\ttp\tcoder\tmode\ttexts\tmean_bpw\tmean_ppl\n";
  for (const auto& row : rows) {
    table << row["f"].get<std::size_t>() << '\t' << shortest(row["tp"].get<double>()) << '\t'
          << row["coder"].get<std::string>() << '\t' << row["mode"].get<std::string>() << '\t'
          << row["texts"].get<std::size_t>() << '\t';
    table.precision(4);
    table << row["mean_bpw"].get<double>() << '\t';
    table.precision(3);
    table << row["mean_ppl"].get<double>() << '\n';
  }
  out << table.str();
  return kExitOk;
}

void add_settings(CLI::App& app, Settings& s) {
  app.add_option("--f,--interval", s.interval, "Masking interval (>= 1)")->capture_default_str();
  app.add_option("--tp,--threshold", s.threshold, "Candidate probability threshold")->capture_default_str();
  app.add_option("--coder", s.coder, "Information encoding")
      ->check(CLI::IsMember({"consistency", "block"}))
      ->capture_default_str();
  app.add_option("--mode", s.mode, "Prediction mode")
      ->check(CLI::IsMember({"auto", "parallel"}))
      ->capture_default_str();
  app.add_option("--framing", s.framing, "Payload framing")
      ->check(CLI::IsMember({"length", "none"}))
      ->capture_default_str();
  app.add_option("--lm", s.lm, "Masked LM backend")
      ->check(CLI::IsMember({"reference", "remote"}))
      ->capture_default_str();
  app.add_option("--endpoint", s.endpoint, "Inference service base URL (remote LM)");
  app.add_option("--vocab", s.vocab, "Vocabulary file (reference LM)");
  app.add_option("--seed", s.seed, "Reference LM seed")->capture_default_str();
  app.add_option("--key-file", s.key_file, "File holding the secret key (one trailing newline is ignored)");
  app.add_option("--key-env", s.key_env, "Environment variable holding the secret key");
  app.add_option("--payload-enc", s.payload_enc, "Payload file encoding")
      ->check(CLI::IsMember({"hex", "base64", "bits"}))
      ->capture_default_str();
  app.add_flag("--verbose,-v", s.verbose, "Echo the effective configuration to stderr");
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::capacity:
      return kExitCapacity;
    case ErrorKind::desync:
    case ErrorKind::truncated_stream:
      return kExitDecode;
    case ErrorKind::transport:
    case ErrorKind::protocol:
    case ErrorKind::determinism:
      return kExitModel;
    case ErrorKind::config:
    case ErrorKind::format:
      return kExitConfig;
    case ErrorKind::io:
      return kExitIo;
    case ErrorKind::bounds:
    case ErrorKind::contract:
    case ErrorKind::degenerate_set:
    case ErrorKind::undefined_payload:
    case ErrorKind::internal:
      break;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Masked-LM linguistic steganography", "maskstego"};
  app.set_config("--config", "", "Flat key=value settings file; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  add_settings(app, settings);

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Hide a payload in a cover text");
  embed_cmd->add_option("--cover", embed_args.cover, "Cover text file")->required();
  embed_cmd->add_option("--payload", embed_args.payload, "Payload file")->required();
  embed_cmd->add_option("--out", embed_args.out, "Stego text output file")->required();
  embed_cmd->add_option("--report", embed_args.report, "JSON report file (default: stdout)");

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a payload from a stego text");
  extract_cmd->add_option("--stego", extract_args.stego, "Stego text file")->required();
  extract_cmd->add_option("--out", extract_args.out, "Payload output file")->required();
  extract_cmd->add_option("--report", extract_args.report, "JSON report file (default: stdout)");

  std::string inspect_text;
  auto* inspect_cmd = app.add_subcommand("inspect", "Show masked positions, candidates and codes");
  inspect_cmd->add_option("--text", inspect_text, "Text file")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Mean bpw and pseudo-perplexity over a corpus");
  bench_cmd->add_option("--corpus", bench_args.corpus, "Directory of *.txt cover texts")->required();
  bench_cmd->add_option("--grid-f", bench_args.intervals, "Masking intervals")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--grid-tp", bench_args.thresholds, "Thresholds (default: --tp)")->delimiter(',');
  bench_cmd->add_option("--grid-coder", bench_args.coders, "Coders")
      ->delimiter(',')
      ->check(CLI::IsMember({"consistency", "block"}))
      ->capture_default_str();
  bench_cmd->add_option("--grid-mode", bench_args.modes, "Prediction modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"auto", "parallel"}))
      ->capture_default_str();
  bench_cmd->add_option("--bits-seed", bench_args.bits_seed, "Seed for the random payload bits")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*embed_cmd) return cmd_embed(settings, embed_args, out, err);
    if (*extract_cmd) return cmd_extract(settings, extract_args, out, err);
    if (*inspect_cmd) return cmd_inspect(settings, inspect_text, out, err);
    if (*bench_cmd) return cmd_bench(settings, bench_args, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace maskstego::cli
