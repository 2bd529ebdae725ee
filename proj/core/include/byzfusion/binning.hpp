#ifndef BYZFUSION_BINNING_HPP
#define BYZFUSION_BINNING_HPP

#include <cstdint>
#include <vector>

#include "byzfusion/rng.hpp"

namespace byzfusion::protocol {

// One dynamic random binning: a uniform i.i.d. assignment of every possible
// chunk to one of j bins, drawn fresh for every verification round.
//
// Chunk spaces up to 2^20 get an explicit table (Byzantine strategies can
// inspect the whole assignment, matching what the verification step leaks).
// Larger spaces use a seeded hash materialized on demand, which has the same
// per-chunk uniform marginals and pairwise independence.
class BinAssignment {
 public:
  static constexpr std::uint64_t kExplicitLimit = 1ull << 20;

  BinAssignment(std::uint64_t chunk_space, std::uint32_t bin_count,
                std::uint64_t seed);

  std::uint32_t bin_of(std::uint64_t chunk) const;

  std::uint64_t chunk_space() const { return chunk_space_; }
  std::uint32_t bin_count() const { return bin_count_; }
  std::uint64_t seed() const { return seed_; }
  bool has_explicit_table() const { return !table_.empty(); }

 private:
  std::uint64_t chunk_space_;
  std::uint32_t bin_count_;
  std::uint64_t seed_;
  std::vector<std::uint32_t> table_;
};

// Draws the seed for a brand-new assignment from `rng`.
BinAssignment fresh_binning(std::uint64_t chunk_space, std::uint32_t bin_count,
                            Rng& rng);

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_BINNING_HPP
