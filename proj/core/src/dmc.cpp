#include "byzfusion/dmc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json_util.hpp"

namespace byzfusion::channel {

namespace {
constexpr double kRowSumTolerance = 1e-12;
}

Dmc::Dmc(std::size_t input_size, std::size_t output_size,
         std::vector<std::vector<double>> rows)
    : input_size_(input_size), output_size_(output_size), rows_(std::move(rows)) {
  if (input_size_ < 1 || output_size_ < 1) {
    throw std::invalid_argument("Dmc: alphabet sizes must be >= 1");
  }
  if (rows_.size() != input_size_) {
    throw std::invalid_argument("Dmc: row count must equal input alphabet size");
  }
  for (const auto& row : rows_) {
    if (row.size() != output_size_) {
      throw std::invalid_argument("Dmc: row length must equal output alphabet size");
    }
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("Dmc: entries must lie in [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("Dmc: each row must sum to 1 (within 1e-12)");
    }
  }
  log_rows_.resize(input_size_);
  for (std::size_t x = 0; x < input_size_; ++x) {
    log_rows_[x].resize(output_size_);
    for (std::size_t y = 0; y < output_size_; ++y) {
      log_rows_[x][y] = rows_[x][y] > 0.0
                            ? std::log(rows_[x][y])
                            : -std::numeric_limits<double>::infinity();
    }
  }
}

Dmc Dmc::bsc(double crossover) {
  if (!(crossover >= 0.0 && crossover <= 1.0)) {
    throw std::invalid_argument("Dmc::bsc: crossover must lie in [0, 1]");
  }
  return Dmc(2, 2,
             {{1.0 - crossover, crossover}, {crossover, 1.0 - crossover}});
}

Dmc Dmc::identity(std::size_t size) {
  std::vector<std::vector<double>> rows(size, std::vector<double>(size, 0.0));
  for (std::size_t i = 0; i < size; ++i) rows[i][i] = 1.0;
  return Dmc(size, size, std::move(rows));
}

bool Dmc::is_noiseless() const {
  // Noiseless here: every input maps to a single output, and no two inputs
  // share that output.
  std::vector<int> hit(output_size_, 0);
  for (std::size_t x = 0; x < input_size_; ++x) {
    std::size_t ones = 0, where = 0;
    for (std::size_t y = 0; y < output_size_; ++y) {
      if (rows_[x][y] == 1.0) {
        ++ones;
        where = y;
      } else if (rows_[x][y] != 0.0) {
        return false;
      }
    }
    if (ones != 1 || hit[where]++) return false;
  }
  return true;
}

Dmc Dmc::from_json_string(const std::string& text) {
  const auto doc = detail::parse_or_throw(text, "dmc");
  const auto inputs = detail::require<std::size_t>(doc, "inputs", "dmc");
  const auto outputs = detail::require<std::size_t>(doc, "outputs", "dmc");
  const auto rows =
      detail::require<std::vector<std::vector<double>>>(doc, "rows", "dmc");
  return Dmc(inputs, outputs, rows);
}

Dmc Dmc::from_json_file(const std::string& path) {
  return from_json_string(detail::read_file(path));
}

std::string Dmc::to_json_string() const {
  detail::json doc;
  doc["inputs"] = input_size_;
  doc["outputs"] = output_size_;
  doc["rows"] = rows_;
  return doc.dump();
}

std::vector<Symbol> transmit(const Dmc& dmc, std::span<const Symbol> input,
                             Rng& rng) {
  std::vector<Symbol> output;
  output.reserve(input.size());
  for (Symbol x : input) {
    if (x >= dmc.input_size()) {
      throw std::invalid_argument("transmit: input symbol out of alphabet");
    }
    output.push_back(static_cast<Symbol>(rng.pick(dmc.row(x))));
  }
  return output;
}

Word transmit(const Dmc& dmc, const Word& input, Rng& rng) {
  Word out;
  out.symbols = transmit(dmc, input.symbols, rng);
  out.carried_index = input.carried_index;
  return out;
}

}  // namespace byzfusion::channel
