#ifndef BYZFUSION_CHANNEL_CODE_HPP
#define BYZFUSION_CHANNEL_CODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "byzfusion/dmc.hpp"

namespace byzfusion::channel {

enum class CodeMode { kIdeal, kRandomCodebook };

// An (M, n, eps) block code over a DMC, in one of two modes.
//
// Ideal mode models the abstract code the analysis assumes: the message
// index rides out of band and decoding is wrong with the declared
// probability, the wrong index being uniform over the M-1 others (the error
// kernel is not pinned down by the model; uniform is the least-informative
// choice and is kept configurable via `decode` taking the session source).
//
// RandomCodebook mode is a concrete instance: i.i.d. codewords drawn from a
// given input distribution, maximum-likelihood decoding, ties to the lowest
// index.
class ChannelCode {
 public:
  static ChannelCode ideal(std::uint64_t message_count,
                           std::uint32_t block_length, double error_prob);
  static ChannelCode random_codebook(std::uint64_t message_count,
                                     std::uint32_t block_length,
                                     const Dmc& dmc,
                                     std::span<const double> input_dist,
                                     Rng& rng);

  CodeMode mode() const { return mode_; }
  std::uint64_t message_count() const { return message_count_; }
  std::uint32_t block_length() const { return block_length_; }

  // Declared error probability (ideal mode), else the last certified value.
  std::optional<double> certified_error_prob() const {
    return certified_error_prob_;
  }
  double declared_error_prob() const { return declared_error_prob_; }

  Word encode(std::uint64_t message_index) const;

  // `noise` is the session randomness used for ideal-mode error injection;
  // it is not consumed in RandomCodebook mode.
  std::uint64_t decode(const Dmc& dmc, const Word& received, Rng& noise) const;

  // Monte Carlo block-error estimate over uniform messages; the result is
  // stored as the certified error probability.
  double certify(const Dmc& dmc, std::uint64_t trials, Rng& rng);

  std::span<const Symbol> codeword(std::uint64_t message_index) const;

  std::string codebook_to_json_string() const;
  static ChannelCode codebook_from_json_string(const std::string& text);

 private:
  ChannelCode() = default;

  CodeMode mode_ = CodeMode::kIdeal;
  std::uint64_t message_count_ = 1;
  std::uint32_t block_length_ = 1;
  double declared_error_prob_ = 0.0;
  std::optional<double> certified_error_prob_;
  std::vector<std::vector<Symbol>> codewords_;  // RandomCodebook only
  std::size_t input_alphabet_ = 0;              // RandomCodebook only
};

}  // namespace byzfusion::channel

#endif  // BYZFUSION_CHANNEL_CODE_HPP
