#ifndef BYZFUSION_RNG_HPP
#define BYZFUSION_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace byzfusion {

// splitmix64 step; used for seed derivation and stateless hashing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stateless mix of up to three words into one. Distinct tags give streams
// that are independent for all practical purposes.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
  std::uint64_t s = a;
  std::uint64_t h = splitmix64(s);
  s ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= splitmix64(s);
  s ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= splitmix64(s);
  return h;
}

// Uniform double in [0,1) from a hashed key, without touching any stream.
inline double hash_unit(std::uint64_t a, std::uint64_t b = 0,
                        std::uint64_t c = 0) {
  return static_cast<double>(mix_seed(a, b, c) >> 11) * 0x1.0p-53;
}

// Seeded PRNG with hand-rolled distributions. std::mt19937_64 output is
// pinned by the standard, and the distribution code below avoids the
// implementation-defined std::*_distribution classes, so results are
// byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n) without modulo bias (Lemire with rejection).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
    unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) { return next_unit() < p; }

  // Sample an index from a probability row (cumulative scan). The row is
  // assumed to sum to 1; rounding shortfall falls into the last index.
  std::size_t pick(std::span<const double> probs) {
    const double u = next_unit();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return probs.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

// Purpose tags for the per-session stream split. Separate streams keep
// behaviorally identical runs aligned draw-for-draw even when unrelated
// aspects (sensor roles, adversary internals) differ.
enum class StreamTag : std::uint64_t {
  kRoles = 1,
  kBinning = 2,
  kCodeNoise = 3,
  kChannel = 4,
  kAdversary = 5,
  kMessage = 6,
  kTrial = 7,
};

inline Rng make_stream(std::uint64_t seed, StreamTag tag) {
  return Rng(mix_seed(seed, static_cast<std::uint64_t>(tag)));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 StreamTag tag = StreamTag::kTrial) {
  return mix_seed(master, index, static_cast<std::uint64_t>(tag));
}

}  // namespace byzfusion

#endif  // BYZFUSION_RNG_HPP
