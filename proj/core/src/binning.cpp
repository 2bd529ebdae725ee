#include "byzfusion/binning.hpp"

#include <stdexcept>

namespace byzfusion::protocol {

BinAssignment::BinAssignment(std::uint64_t chunk_space, std::uint32_t bin_count,
                             std::uint64_t seed)
    : chunk_space_(chunk_space), bin_count_(bin_count), seed_(seed) {
  if (chunk_space_ < 1) {
    throw std::invalid_argument("BinAssignment: chunk space must be >= 1");
  }
  if (bin_count_ < 1) {
    throw std::invalid_argument("BinAssignment: bin count must be >= 1");
  }
  if (chunk_space_ <= kExplicitLimit) {
    table_.resize(chunk_space_);
    Rng rng(seed_);
    for (auto& bin : table_) {
      bin = static_cast<std::uint32_t>(rng.next_below(bin_count_));
    }
  }
}

std::uint32_t BinAssignment::bin_of(std::uint64_t chunk) const {
  if (chunk >= chunk_space_) {
    throw std::out_of_range("BinAssignment::bin_of: chunk outside space");
  }
  if (!table_.empty()) return table_[chunk];
  // Lazy mode: hash to 64 uniform bits, multiplicative range map. The bias
  // of the map is j / 2^64.
  const std::uint64_t h = mix_seed(seed_, chunk, 0x62696e6e696e67ull);
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(h) * bin_count_) >> 64);
}

BinAssignment fresh_binning(std::uint64_t chunk_space, std::uint32_t bin_count,
                            Rng& rng) {
  return BinAssignment(chunk_space, bin_count, rng.next_u64());
}

}  // namespace byzfusion::protocol
