#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "maskstego/bits.hpp"
#include "maskstego/key.hpp"
#include "maskstego/lm.hpp"

namespace maskstego {

struct Candidate {
  Token token;
  double prob = 0.0;         // renormalized over the candidate set
  double source_prob = 0.0;  // as reported by the LM
};

/// Maskable tokens whose LM probability exceeds the threshold, renormalized to
/// sum to one. Canonical order is inherited from the distribution.
struct CandidateSet {
  std::vector<Candidate> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
};

CandidateSet select_candidates(const PredictionDistribution& dist, double threshold);

enum class CoderKind { consistency, block };

std::string_view to_string(CoderKind kind) noexcept;
CoderKind parse_coder_kind(std::string_view name);

struct CodeWord {
  Token token;
  BitVector code;
};

/// Prefix-free token -> bitstring mapping for one masked position.
class CodeBook {
 public:
  CodeBook(CoderKind kind, std::vector<CodeWord> words);

  CoderKind kind() const noexcept { return kind_; }
  const std::vector<CodeWord>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t min_length() const noexcept { return min_length_; }
  std::size_t max_length() const noexcept { return max_length_; }

  const CodeWord* find(const Token& token) const noexcept;

 private:
  CoderKind kind_;
  std::vector<CodeWord> words_;
  std::size_t min_length_ = 0;
  std::size_t max_length_ = 0;
};

/// Huffman code over the candidate probabilities.
///
/// Merging always takes the two nodes with the smallest (weight, earliest
/// canonical leaf) pair; the first becomes child 0. Internal nodes are then
/// numbered in pre-order and node n has its child labels swapped when
/// key.keyed_u64("huffman-swap", position, n) is odd. The key therefore only
/// permutes labels; code lengths depend on the probabilities alone.
CodeBook build_consistency_codebook(const CandidateSet& cands, const SecretKey& key,
                                    std::size_t position);

/// Baseline fixed-length code: the top 2^l candidates, l = floor(log2 w),
/// candidate i receiving the l-bit big-endian binary of i.
CodeBook build_block_codebook(const CandidateSet& cands);

CodeBook build_codebook(CoderKind kind, const CandidateSet& cands, const SecretKey& key,
                        std::size_t position);

struct EncodedStep {
  const CodeWord* word = nullptr;
  std::size_t consumed = 0;
};

/// Picks the codeword that prefixes stream[cursor..], reading zeros past the
/// end of the stream.
EncodedStep encode_step(const CodeBook& book, const BitVector& stream, std::size_t cursor = 0);

/// Code of the observed token; throws a desync error when it is not in the book.
const BitVector& decode_step(const CodeBook& book, const Token& observed);

}  // namespace maskstego
