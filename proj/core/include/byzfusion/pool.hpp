#ifndef BYZFUSION_POOL_HPP
#define BYZFUSION_POOL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "byzfusion/rng.hpp"

namespace byzfusion::protocol {

enum class Role : std::uint8_t { kHonest, kByzantine };

// The sensor population. The default is the infinite-population model:
// every fresh poll returns a never-seen id whose role is an independent
// Bernoulli(beta) draw. Roles are a pure function of (seed, id), so they are
// stable within a session and identical across replays.
//
// The optional finite mode draws ids from {0..size-1}; verification polls
// then sample without replacement.
class SensorPool {
 public:
  SensorPool(double beta, std::uint64_t role_seed,
             std::optional<std::uint64_t> finite_size = std::nullopt);

  std::uint64_t fresh_sensor();
  // k verifier ids: i.i.d. fresh in infinite mode, a without-replacement
  // sample in finite mode.
  std::vector<std::uint64_t> fresh_verifiers(std::uint32_t k);

  Role role_of(std::uint64_t id) const;
  double beta() const { return beta_; }

 private:
  double beta_;
  std::uint64_t role_seed_;
  std::optional<std::uint64_t> finite_size_;
  std::uint64_t next_id_ = 0;
  Rng draw_rng_;  // consumed only in finite mode
};

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_POOL_HPP
