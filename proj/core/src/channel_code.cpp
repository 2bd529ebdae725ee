#include "byzfusion/channel_code.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json_util.hpp"

namespace byzfusion::channel {

ChannelCode ChannelCode::ideal(std::uint64_t message_count,
                               std::uint32_t block_length, double error_prob) {
  if (message_count < 1) {
    throw std::invalid_argument("ChannelCode: message_count must be >= 1");
  }
  if (block_length < 1) {
    throw std::invalid_argument("ChannelCode: block_length must be >= 1");
  }
  if (!(error_prob >= 0.0 && error_prob < 1.0)) {
    throw std::invalid_argument("ChannelCode: error_prob must lie in [0, 1)");
  }
  ChannelCode code;
  code.mode_ = CodeMode::kIdeal;
  code.message_count_ = message_count;
  code.block_length_ = block_length;
  code.declared_error_prob_ = error_prob;
  code.certified_error_prob_ = error_prob;
  return code;
}

ChannelCode ChannelCode::random_codebook(std::uint64_t message_count,
                                         std::uint32_t block_length,
                                         const Dmc& dmc,
                                         std::span<const double> input_dist,
                                         Rng& rng) {
  if (message_count < 1) {
    throw std::invalid_argument("ChannelCode: message_count must be >= 1");
  }
  if (block_length < 1) {
    throw std::invalid_argument("ChannelCode: block_length must be >= 1");
  }
  if (input_dist.size() != dmc.input_size()) {
    throw std::invalid_argument(
        "ChannelCode: input distribution size must match the DMC alphabet");
  }
  ChannelCode code;
  code.mode_ = CodeMode::kRandomCodebook;
  code.message_count_ = message_count;
  code.block_length_ = block_length;
  code.input_alphabet_ = dmc.input_size();
  code.codewords_.resize(message_count);
  for (auto& word : code.codewords_) {
    word.resize(block_length);
    for (auto& symbol : word) {
      symbol = static_cast<Symbol>(rng.pick(input_dist));
    }
  }
  return code;
}

Word ChannelCode::encode(std::uint64_t message_index) const {
  if (message_index >= message_count_) {
    throw std::out_of_range("ChannelCode::encode: message index out of range");
  }
  Word word;
  if (mode_ == CodeMode::kIdeal) {
    word.symbols.assign(block_length_, 0);
    word.carried_index = message_index;
  } else {
    word.symbols = codewords_[message_index];
  }
  return word;
}

std::uint64_t ChannelCode::decode(const Dmc& dmc, const Word& received,
                                  Rng& noise) const {
  if (mode_ == CodeMode::kIdeal) {
    if (!received.carried_index.has_value()) {
      // Arbitrary (non-codeword) signal: the decoder has nothing to anchor
      // on; its output is uniform over the message set.
      return noise.next_below(message_count_);
    }
    const std::uint64_t sent = *received.carried_index % message_count_;
    if (message_count_ > 1 && noise.bernoulli(declared_error_prob_)) {
      const std::uint64_t shift = 1 + noise.next_below(message_count_ - 1);
      return (sent + shift) % message_count_;
    }
    return sent;
  }

  if (received.symbols.size() != block_length_) {
    throw std::invalid_argument("ChannelCode::decode: length mismatch");
  }
  // ML in the log domain; ties go to the lowest message index.
  std::uint64_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < message_count_; ++m) {
    double score = 0.0;
    const auto& word = codewords_[m];
    for (std::uint32_t t = 0; t < block_length_; ++t) {
      score += dmc.log_prob(received.symbols[t], word[t]);
      if (score == -std::numeric_limits<double>::infinity()) break;
    }
    if (score > best_score) {
      best_score = score;
      best = m;
    }
  }
  return best;
}

double ChannelCode::certify(const Dmc& dmc, std::uint64_t trials, Rng& rng) {
  if (trials < 1) {
    throw std::invalid_argument("ChannelCode::certify: trials must be >= 1");
  }
  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t message = rng.next_below(message_count_);
    const Word sent = encode(message);
    const Word received = transmit(dmc, sent, rng);
    if (decode(dmc, received, rng) != message) ++errors;
  }
  const double estimate =
      static_cast<double>(errors) / static_cast<double>(trials);
  certified_error_prob_ = estimate;
  return estimate;
}

std::span<const Symbol> ChannelCode::codeword(std::uint64_t message_index) const {
  if (mode_ != CodeMode::kRandomCodebook) {
    throw std::logic_error("ChannelCode::codeword: ideal codes have no codebook");
  }
  if (message_index >= message_count_) {
    throw std::out_of_range("ChannelCode::codeword: message index out of range");
  }
  return codewords_[message_index];
}

std::string ChannelCode::codebook_to_json_string() const {
  if (mode_ != CodeMode::kRandomCodebook) {
    throw std::logic_error("codebook_to_json_string: ideal codes have no codebook");
  }
  detail::json doc;
  doc["message_count"] = message_count_;
  doc["block_length"] = block_length_;
  doc["input_alphabet"] = input_alphabet_;
  doc["codewords"] = codewords_;
  if (certified_error_prob_) doc["certified_error_prob"] = *certified_error_prob_;
  return doc.dump();
}

ChannelCode ChannelCode::codebook_from_json_string(const std::string& text) {
  const auto doc = detail::parse_or_throw(text, "codebook");
  ChannelCode code;
  code.mode_ = CodeMode::kRandomCodebook;
  code.message_count_ =
      detail::require<std::uint64_t>(doc, "message_count", "codebook");
  code.block_length_ =
      detail::require<std::uint32_t>(doc, "block_length", "codebook");
  code.input_alphabet_ =
      detail::require<std::size_t>(doc, "input_alphabet", "codebook");
  code.codewords_ = detail::require<std::vector<std::vector<Symbol>>>(
      doc, "codewords", "codebook");
  if (doc.contains("certified_error_prob")) {
    code.certified_error_prob_ = doc["certified_error_prob"].get<double>();
  }
  if (code.codewords_.size() != code.message_count_) {
    throw detail::JsonError("codebook: codeword count mismatch");
  }
  for (const auto& word : code.codewords_) {
    if (word.size() != code.block_length_) {
      throw detail::JsonError("codebook: codeword length mismatch");
    }
    for (Symbol s : word) {
      if (s >= code.input_alphabet_) {
        throw detail::JsonError("codebook: symbol outside input alphabet");
      }
    }
  }
  return code;
}

}  // namespace byzfusion::channel
