#ifndef BYZFUSION_SESSION_HPP
#define BYZFUSION_SESSION_HPP

#include <cstdint>
#include <span>

#include "byzfusion/adversary.hpp"
#include "byzfusion/channel_code.hpp"
#include "byzfusion/transcript.hpp"

namespace byzfusion::protocol {

// Strict-majority acceptance: more than half of the k responses must equal
// the decoded chunk's bin. With even k a tie declines.
bool verify_chunk(std::uint64_t decoded_chunk, const BinAssignment& binning,
                  std::span<const std::uint32_t> responses);

struct SessionConfig {
  const ProtocolParams* params = nullptr;
  const channel::Dmc* dmc = nullptr;
  const channel::ChannelCode* g1 = nullptr;  // (2^(nR/v), n/v, eps) chunk code
  const channel::ChannelCode* g2 = nullptr;  // (j, l, eps) bin-index code
  adversary::Strategy* strategy = nullptr;   // handles Byzantine-role polls
  const analysis::MdpSolution* mdp = nullptr;  // exposed to the adversary view
  bool record_polls = true;
};

// One fusion session:
//   0) poll a fresh sensor for the next chunk
//   1) the sensor transmits the chunk via G1 (Byzantine: anything)
//   2) draw a fresh random binning, poll k fresh sensors for the bin index
//   3) accept on strict majority match against the decoded chunk's bin
//   4) accept: keep the sensor, next chunk; decline: fresh sensor, retry
//   5) after v accepted chunks, reassemble the message
// Aborts (scored as errors) after params->max_attempts chunk attempts.
SessionTranscript run_session(const SessionConfig& config,
                              std::uint64_t message,
                              std::uint64_t session_seed);

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_SESSION_HPP
