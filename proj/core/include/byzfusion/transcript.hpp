#ifndef BYZFUSION_TRANSCRIPT_HPP
#define BYZFUSION_TRANSCRIPT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "byzfusion/pool.hpp"

namespace byzfusion::protocol {

// Per-attempt error events, following the error analysis:
//   a1: the decoded chunk differs from the transmitted one
//   a2: no strict majority of decoded bin indices equals the true chunk's bin
//   a3: decoded != true and both land in the same bin
//   b1: the chunk was declined
//   b2: the chunk was accepted and is not the true one
//   c : the true chunk was transmitted
struct AttemptEvents {
  bool a1 = false, a2 = false, a3 = false;
  bool b1 = false, b2 = false, c = false;
  bool pair_distinct = false;  // decoded != true (a3 is defined on these)
};

struct VerifierPoll {
  std::uint64_t sensor_id = 0;
  Role role = Role::kHonest;
  std::uint32_t intended_bin = 0;  // bin of the true chunk
  std::optional<std::uint32_t> sent_bin;  // nullopt for arbitrary signals
  std::uint32_t decoded_bin = 0;
};

struct AttemptRecord {
  std::uint32_t chunk_index = 0;
  std::uint64_t transmitter_id = 0;
  Role transmitter_role = Role::kHonest;
  std::uint64_t true_chunk = 0;
  std::optional<std::uint64_t> sent_chunk;  // nullopt for arbitrary signals
  std::uint64_t decoded_chunk = 0;
  std::uint64_t binning_seed = 0;
  std::uint32_t bin_of_true = 0;
  std::uint32_t bin_of_decoded = 0;
  std::vector<VerifierPoll> polls;
  bool accepted = false;
  AttemptEvents events;
};

// Event totals split by whether the true chunk was transmitted (the c /
// not-c conditioning the analysis works with).
struct EventTotals {
  std::uint64_t attempts = 0;
  std::uint64_t attempts_c = 0;
  std::uint64_t a1_c = 0, a1_cc = 0;
  std::uint64_t a2_c = 0, a2_cc = 0;
  std::uint64_t a3_c = 0, a3_cc = 0;
  std::uint64_t b1_c = 0, b1_cc = 0;
  std::uint64_t b2_c = 0, b2_cc = 0;
  std::uint64_t pair_c = 0, pair_cc = 0;

  void record(const AttemptEvents& events);
  void merge(const EventTotals& other);
};

struct SessionTranscript {
  std::uint64_t message = 0;
  std::uint64_t decoded_message = 0;
  bool error = false;    // decoded != message, or aborted
  bool aborted = false;  // max_attempts exhausted
  std::uint64_t channel_uses = 0;
  std::uint32_t accepted_count = 0;
  std::vector<AttemptRecord> attempts;
  EventTotals totals;

  // One JSON object per attempt, newline separated.
  std::string attempts_to_jsonl(std::uint64_t trial_index) const;
};

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_TRANSCRIPT_HPP
