#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "golden_fixtures.hpp"
#include "maskstego/error.hpp"
#include "maskstego/metrics.hpp"
#include "random_text.hpp"
#include "table1.hpp"

namespace maskstego {
namespace {

using testing::kF2Baseline;
using testing::kF2Proposed;
using testing::kF4Baseline;
using testing::kF4Proposed;
using testing::parse_annotated;

std::string two_decimals(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

TEST(PayloadBpw, ThirteenOverThirtyOne) {
  const auto [text, bits] = parse_annotated(kF2Baseline);
  EXPECT_EQ(text.size(), 32u);
  EXPECT_EQ(bits, 13u);
  const PayloadStats stats = payload_bpw(text, bits);
  EXPECT_EQ(stats.countable_words, 31u);
  EXPECT_EQ(two_decimals(stats.bpw), "0.42");
}

TEST(PayloadBpw, AnnotatedRowsReproduceReportedPayload) {
  const auto [proposed, proposed_bits] = parse_annotated(kF2Proposed);
  EXPECT_EQ(proposed_bits, 15u);
  EXPECT_EQ(two_decimals(payload_bpw(proposed, proposed_bits).bpw), "0.48");

  const auto [f4_base, f4_base_bits] = parse_annotated(kF4Baseline);
  EXPECT_EQ(two_decimals(payload_bpw(f4_base, f4_base_bits).bpw), "0.23");
  const auto [f4_prop, f4_prop_bits] = parse_annotated(kF4Proposed);
  EXPECT_EQ(two_decimals(payload_bpw(f4_prop, f4_prop_bits).bpw), "0.32");
}

TEST(PayloadBpw, ZeroBits) {
  EXPECT_EQ(payload_bpw(split_whitespace("a b c ."), 0).bpw, 0.0);
}

TEST(PayloadBpw, NoCountableWords) {
  try {
    payload_bpw(split_whitespace(". , !"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::undefined_payload);
  }
}

TEST(PayloadBpw, PunctuationInsertionIsNeutral) {
  std::mt19937_64 rng(12);
  const auto lm = testing::vocab64_lm();
  for (int trial = 0; trial < 100; ++trial) {
    auto text = testing::random_cover(rng, lm.vocab(), 20 + rng() % 30);
    const std::size_t bits = rng() % 64;
    const double before = payload_bpw(text, bits).bpw;
    text.insert(text.begin() + static_cast<std::ptrdiff_t>(rng() % text.size()), Token(";"));
    EXPECT_EQ(payload_bpw(text, bits).bpw, before);
  }
}

TEST(PseudoPerplexity, CertainModelScoresOne) {
  const ReferenceLM lm({Token("city")}, 5);
  const auto result = pseudo_perplexity(lm, split_whitespace("city city . city"));
  EXPECT_DOUBLE_EQ(result.value, 1.0);
  EXPECT_EQ(result.evaluated, 3u);
  EXPECT_EQ(result.floored, 0u);
}

TEST(PseudoPerplexity, FiniteAndPositive) {
  const auto lm = testing::vocab64_lm();
  std::mt19937_64 rng(6);
  const auto text = testing::random_cover(rng, lm.vocab(), 40);
  auto scrambled = text;
  std::shuffle(scrambled.begin(), scrambled.end(), rng);
  for (const auto& t : {text, scrambled}) {
    const auto r = pseudo_perplexity(lm, t);
    EXPECT_TRUE(std::isfinite(r.value));
    EXPECT_GT(r.value, 0.0);
  }
}

TEST(PseudoPerplexity, FloorsUnknownTokens) {
  const auto lm = testing::vocab64_lm();
  const auto r = pseudo_perplexity(lm, split_whitespace("Midshire city"));
  EXPECT_EQ(r.floored, 1u);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(PseudoPerplexity, MatchesOracle) {
  std::ifstream in(testing::data_path("corpus/text_001.txt"));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto r = pseudo_perplexity(testing::vocab64_lm(), split_whitespace(buffer.str()));
  EXPECT_NEAR(r.value, golden::kPseudoPerplexityText001, 1e-9 * golden::kPseudoPerplexityText001);
}

TEST(PseudoPerplexity, NothingToScore) {
  EXPECT_THROW(pseudo_perplexity(testing::vocab64_lm(), split_whitespace(". ,")), Error);
}

}  // namespace
}  // namespace maskstego
