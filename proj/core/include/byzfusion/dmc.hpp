#ifndef BYZFUSION_DMC_HPP
#define BYZFUSION_DMC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "byzfusion/rng.hpp"

namespace byzfusion::channel {

using Symbol = std::uint32_t;

// Discrete memoryless channel {X, Y, q(y|x)}. Rows are indexed by the input
// symbol and must be probability vectors.
class Dmc {
 public:
  Dmc(std::size_t input_size, std::size_t output_size,
      std::vector<std::vector<double>> rows);

  static Dmc bsc(double crossover);
  static Dmc identity(std::size_t size);

  std::size_t input_size() const { return input_size_; }
  std::size_t output_size() const { return output_size_; }

  double prob(Symbol output, Symbol input) const {
    return rows_[input][output];
  }
  // log q(y|x); -inf when q(y|x) = 0.
  double log_prob(Symbol output, Symbol input) const {
    return log_rows_[input][output];
  }
  std::span<const double> row(Symbol input) const { return rows_[input]; }

  bool is_noiseless() const;

  static Dmc from_json_string(const std::string& text);
  static Dmc from_json_file(const std::string& path);
  std::string to_json_string() const;

 private:
  std::size_t input_size_;
  std::size_t output_size_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::vector<double>> log_rows_;
};

// One output symbol per input symbol, each drawn from q(.|x). Deterministic
// given the random source state.
std::vector<Symbol> transmit(const Dmc& dmc, std::span<const Symbol> input,
                             Rng& rng);

// A block of channel symbols. Ideal-mode codes transport their message index
// out of band through `carried_index`; the channel never touches it.
struct Word {
  std::vector<Symbol> symbols;
  std::optional<std::uint64_t> carried_index;
};

Word transmit(const Dmc& dmc, const Word& input, Rng& rng);

}  // namespace byzfusion::channel

#endif  // BYZFUSION_DMC_HPP
