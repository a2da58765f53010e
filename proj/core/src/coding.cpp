#include "maskstego/coding.hpp"

#include <bit>
#include <limits>
#include <queue>
#include <utility>

#include "maskstego/error.hpp"
#include "maskstego/masking.hpp"

namespace maskstego {

CandidateSet select_candidates(const PredictionDistribution& dist, double threshold) {
  CandidateSet out;
  double mass = 0.0;
  for (const auto& e : dist.entries()) {
    if (e.prob > threshold && is_maskable(e.token)) {
      out.entries.push_back({e.token, e.prob, e.prob});
      mass += e.prob;
    }
  }
  for (auto& c : out.entries) c.prob = c.source_prob / mass;
  return out;
}

std::string_view to_string(CoderKind kind) noexcept {
  return kind == CoderKind::consistency ? "consistency" : "block";
}

CoderKind parse_coder_kind(std::string_view name) {
  if (name == "consistency") return CoderKind::consistency;
  if (name == "block") return CoderKind::block;
  throw Error(ErrorKind::config, "unknown coder '" + std::string(name) + "'");
}

CodeBook::CodeBook(CoderKind kind, std::vector<CodeWord> words)
    : kind_(kind), words_(std::move(words)) {
  min_length_ = words_.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& w : words_) {
    min_length_ = std::min(min_length_, w.code.size());
    max_length_ = std::max(max_length_, w.code.size());
  }
}

const CodeWord* CodeBook::find(const Token& token) const noexcept {
  for (const auto& w : words_) {
    if (w.token == token) return &w;
  }
  return nullptr;
}

namespace {

void require_two(const CandidateSet& cands) {
  if (cands.size() < 2) {
    throw Error(ErrorKind::degenerate_set,
                "codebook needs at least two candidates, got " + std::to_string(cands.size()));
  }
}

struct HuffmanNode {
  double weight = 0.0;
  std::size_t min_leaf = 0;
  std::size_t children[2] = {kNone, kNone};

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  bool leaf() const noexcept { return children[0] == kNone; }
};

}  // namespace

CodeBook build_consistency_codebook(const CandidateSet& cands, const SecretKey& key,
                                    std::size_t position) {
  require_two(cands);
  const std::size_t w = cands.size();
  std::vector<HuffmanNode> nodes;
  nodes.reserve(2 * w - 1);
  for (std::size_t i = 0; i < w; ++i) {
    HuffmanNode leaf;
    leaf.weight = cands.entries[i].prob;
    leaf.min_leaf = i;
    nodes.push_back(leaf);
  }

  // min_leaf is unique among live nodes, so the order is total.
  auto later = [&nodes](std::size_t a, std::size_t b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
    return nodes[a].min_leaf > nodes[b].min_leaf;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> queue(later);
  for (std::size_t i = 0; i < w; ++i) queue.push(i);

  while (queue.size() > 1) {
    const std::size_t first = queue.top();
    queue.pop();
    const std::size_t second = queue.top();
    queue.pop();
    HuffmanNode parent;
    parent.weight = nodes[first].weight + nodes[second].weight;
    parent.min_leaf = std::min(nodes[first].min_leaf, nodes[second].min_leaf);
    parent.children[0] = first;
    parent.children[1] = second;
    nodes.push_back(parent);
    queue.push(nodes.size() - 1);
  }

  std::vector<BitVector> codes(w);
  std::vector<std::pair<std::size_t, BitVector>> stack;
  stack.emplace_back(queue.top(), BitVector{});
  std::uint64_t preorder = 0;
  while (!stack.empty()) {
    auto [index, prefix] = std::move(stack.back());
    stack.pop_back();
    const HuffmanNode& node = nodes[index];
    if (node.leaf()) {
      codes[node.min_leaf] = std::move(prefix);
      continue;
    }
    const bool swap = (key.keyed_u64("huffman-swap", position, preorder++) & 1U) != 0;
    BitVector zero_side = prefix;
    zero_side.push_back(swap);
    prefix.push_back(!swap);
    // Child 1 is pushed first so child 0's subtree is numbered first.
    stack.emplace_back(node.children[1], std::move(prefix));
    stack.emplace_back(node.children[0], std::move(zero_side));
  }

  std::vector<CodeWord> words;
  words.reserve(w);
  for (std::size_t i = 0; i < w; ++i) words.push_back({cands.entries[i].token, std::move(codes[i])});
  return CodeBook(CoderKind::consistency, std::move(words));
}

CodeBook build_block_codebook(const CandidateSet& cands) {
  require_two(cands);
  const std::size_t length = static_cast<std::size_t>(std::bit_width(cands.size())) - 1;
  const std::size_t count = std::size_t{1} << length;
  std::vector<CodeWord> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BitVector code(length);
    for (std::size_t b = 0; b < length; ++b) code[b] = ((i >> (length - 1 - b)) & 1U) != 0;
    words.push_back({cands.entries[i].token, std::move(code)});
  }
  return CodeBook(CoderKind::block, std::move(words));
}

CodeBook build_codebook(CoderKind kind, const CandidateSet& cands, const SecretKey& key,
                        std::size_t position) {
  return kind == CoderKind::consistency ? build_consistency_codebook(cands, key, position)
                                        : build_block_codebook(cands);
}

EncodedStep encode_step(const CodeBook& book, const BitVector& stream, std::size_t cursor) {
  auto bit_at = [&](std::size_t i) { return i < stream.size() ? bool(stream[i]) : false; };
  for (const auto& word : book.words()) {
    bool match = true;
    for (std::size_t k = 0; k < word.code.size() && match; ++k) {
      match = word.code[k] == bit_at(cursor + k);
    }
    if (match) return {&word, word.code.size()};
  }
  throw Error(ErrorKind::internal, "no codeword prefixes the stream; codebook is not complete");
}

const BitVector& decode_step(const CodeBook& book, const Token& observed) {
  if (const CodeWord* word = book.find(observed)) return word->code;
  throw Error(ErrorKind::desync, "token '" + observed.surface() +
                                     "' is not in the rebuilt codebook (key, threshold or model "
                                     "differs between the parties)");
}

}  // namespace maskstego
