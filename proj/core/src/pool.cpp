#include "byzfusion/pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace byzfusion::protocol {

SensorPool::SensorPool(double beta, std::uint64_t role_seed,
                       std::optional<std::uint64_t> finite_size)
    : beta_(beta),
      role_seed_(role_seed),
      finite_size_(finite_size),
      draw_rng_(mix_seed(role_seed, 0x706f6f6cull)) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("SensorPool: beta must lie in [0, 1)");
  }
  if (finite_size_ && *finite_size_ < 1) {
    throw std::invalid_argument("SensorPool: finite size must be >= 1");
  }
}

std::uint64_t SensorPool::fresh_sensor() {
  if (finite_size_) return draw_rng_.next_below(*finite_size_);
  return next_id_++;
}

std::vector<std::uint64_t> SensorPool::fresh_verifiers(std::uint32_t k) {
  std::vector<std::uint64_t> ids;
  ids.reserve(k);
  if (!finite_size_) {
    for (std::uint32_t i = 0; i < k; ++i) ids.push_back(next_id_++);
    return ids;
  }
  if (k > *finite_size_) {
    throw std::invalid_argument(
        "SensorPool: cannot sample more verifiers than the pool holds");
  }
  // Without replacement, small k: rejection against the already-chosen set.
  while (ids.size() < k) {
    const std::uint64_t candidate = draw_rng_.next_below(*finite_size_);
    if (std::find(ids.begin(), ids.end(), candidate) == ids.end()) {
      ids.push_back(candidate);
    }
  }
  return ids;
}

Role SensorPool::role_of(std::uint64_t id) const {
  return hash_unit(role_seed_, id) < beta_ ? Role::kByzantine : Role::kHonest;
}

}  // namespace byzfusion::protocol
