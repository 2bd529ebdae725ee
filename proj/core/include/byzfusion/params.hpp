#ifndef BYZFUSION_PARAMS_HPP
#define BYZFUSION_PARAMS_HPP

#include <cstdint>
#include <optional>

namespace byzfusion::protocol {

// Every protocol tunable. message_bits is n*R, so the message set has
// 2^message_bits elements and each of the v chunks carries
// message_bits / v bits.
struct ProtocolParams {
  std::uint32_t message_bits = 1;       // nR
  std::uint32_t chunk_count = 1;        // v
  std::uint64_t block_length = 1;       // n
  std::uint32_t bin_count = 2;          // j
  std::uint32_t verifier_count = 1;     // k
  std::uint32_t verify_block_length = 1;  // l
  double code_error = 0.0;              // eps
  double byzantine_fraction = 0.0;      // beta

  // One session is aborted (and scored as an error) after this many chunk
  // attempts.
  std::uint64_t max_attempts = 1000000;
  // Finite-population mode: sensors drawn from a pool of this size,
  // verification samples without replacement. Off by default.
  std::optional<std::uint64_t> finite_pool;

  std::uint32_t chunk_bits() const { return message_bits / chunk_count; }
  std::uint64_t chunk_space() const { return 1ull << chunk_bits(); }
  std::uint64_t message_count() const { return 1ull << message_bits; }
  std::uint64_t chunk_block_length() const {
    return block_length / chunk_count;
  }
  // Channel uses per attempt: n/v for the chunk plus k*l for verification.
  std::uint64_t uses_per_attempt() const {
    return chunk_block_length() +
           static_cast<std::uint64_t>(verifier_count) * verify_block_length;
  }

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

// Checks the schedule constraints used by the rate analysis:
//   1/eps <= v <= 2/eps,  n >= k*l*v/eps,  j >= 1/eps,
//   k >= 2*log(((1-2a)/(1-a))*eps)/log(4a(1-a)) with a = 1-(1-beta)(1-eps).
// Requires a < 1/2 (only attainable when beta < 1/2). Throws on violation.
void validate_paper_schedule(const ProtocolParams& params);

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_PARAMS_HPP
