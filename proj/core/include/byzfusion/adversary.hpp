#ifndef BYZFUSION_ADVERSARY_HPP
#define BYZFUSION_ADVERSARY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "byzfusion/binning.hpp"
#include "byzfusion/dmc.hpp"
#include "byzfusion/mdp.hpp"
#include "byzfusion/params.hpp"
#include "byzfusion/transcript.hpp"

namespace byzfusion::adversary {

// Shared read access for the coordinating Byzantine sensors within one
// attempt. Written by the session loop, read by verify-duty strategies.
struct CoordinationRecord {
  // Set when the current attempt's transmitter substituted a chunk.
  std::optional<std::uint64_t> substituted_chunk;
};

// Everything a Byzantine sensor may condition on: the true message, the
// protocol state, the published binning during verification, the transcript
// so far, and the coordination record. Honest sensors hold no private state
// beyond the message itself, so nothing more is available to leak.
struct AdversaryView {
  std::uint64_t true_message = 0;
  std::span<const std::uint64_t> true_chunks;
  std::uint32_t chunk_index = 0;
  std::uint64_t chunk_space = 2;
  std::uint32_t bin_count = 2;
  std::uint64_t sensor_id = 0;
  const protocol::BinAssignment* binning = nullptr;  // verify phase only
  const protocol::SessionTranscript* history = nullptr;
  const CoordinationRecord* coordination = nullptr;
  const analysis::MdpSolution* mdp = nullptr;
};

struct ChunkAction {
  enum class Kind : std::uint8_t { kHonest, kSubstitute, kArbitrary };
  Kind kind = Kind::kHonest;
  std::uint64_t chunk = 0;        // kSubstitute
  channel::Word signal;           // kArbitrary

  static ChunkAction honest() { return {}; }
  static ChunkAction substitute(std::uint64_t chunk) {
    return {Kind::kSubstitute, chunk, {}};
  }
  static ChunkAction arbitrary(channel::Word signal) {
    return {Kind::kArbitrary, 0, std::move(signal)};
  }
};

struct VerifyAction {
  enum class Kind : std::uint8_t { kHonest, kSubstitute, kArbitrary };
  Kind kind = Kind::kHonest;
  std::uint32_t bin = 0;          // kSubstitute
  channel::Word signal;           // kArbitrary

  static VerifyAction honest() { return {}; }
  static VerifyAction substitute(std::uint32_t bin) {
    return {Kind::kSubstitute, bin, {}};
  }
  static VerifyAction arbitrary(channel::Word signal) {
    return {Kind::kArbitrary, 0, std::move(signal)};
  }
};

struct SessionInit {
  std::uint64_t adversary_seed = 0;
  std::uint64_t message = 0;
  const protocol::ProtocolParams* params = nullptr;
};

// A Byzantine behavior. Strategies are pure functions of the view plus the
// per-session seed handed to begin_session; the session loop queries them
// only for Byzantine-role sensors.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual void begin_session(const SessionInit& init) { (void)init; }
  virtual ChunkAction chunk_action(const AdversaryView& view) = 0;
  virtual VerifyAction verify_action(const AdversaryView& view) = 0;
  virtual std::string_view name() const = 0;
};

// Whether verify-duty Byzantine sensors push the coordinated substituted
// chunk's bin (default) or answer honestly.
enum class VerifierBehavior : std::uint8_t { kCoordinated, kHonest };

// Indistinguishable from honest behavior.
std::unique_ptr<Strategy> honest_mimic();

// Substitutes true_chunk + offset (mod chunk space) on chunk duty. offset
// must be nonzero; a zero offset is rejected at construction.
std::unique_ptr<Strategy> always_lie(
    std::int64_t offset,
    VerifierBehavior verifiers = VerifierBehavior::kCoordinated);

// Plays the recorded per-state decision of the solved error MDP; lies on
// ties. The solution must match the session's (beta, v).
std::unique_ptr<Strategy> mdp_optimal(
    std::shared_ptr<const analysis::MdpSolution> solution,
    std::int64_t lie_offset = 1,
    VerifierBehavior verifiers = VerifierBehavior::kCoordinated);

// The converse attack for beta >= 1/2: one half of the population executes
// the protocol honestly with a false message, the remaining beta - 1/2
// fraction mimics honest behavior with the true one. Group membership is a
// fixed seeded function of the sensor id for the whole session.
struct HalfSplitSpec {
  // Exactly one source of the false message: a fixed value (session fails
  // if it collides with the true message) or an offset added mod M.
  std::optional<std::uint64_t> fixed_false_message;
  std::uint64_t false_message_offset = 1;
};

std::unique_ptr<Strategy> half_split(HalfSplitSpec spec);

}  // namespace byzfusion::adversary

#endif  // BYZFUSION_ADVERSARY_HPP
