#ifndef BYZFUSION_MDP_HPP
#define BYZFUSION_MDP_HPP

#include <cstdint>
#include <vector>

namespace byzfusion::analysis {

// Per-attempt outcome probabilities feeding the session-level Markov
// decision process:
//   p1 = Pr(decline        | true chunk transmitted)
//   p2 = Pr(false accepted | false chunk transmitted)
//   p3 = Pr(false accepted | true chunk transmitted)
struct MdpParams {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double beta = 0.0;         // fraction of Byzantine sensors
  std::uint32_t chunk_count = 1;  // v

  void validate() const;
};

enum class ByzDecision : std::uint8_t { kLie, kTruth };

// Solved value functions. Index i = number of chunks accepted so far;
// the plain vectors are for an honest currently-selected sensor, the
// "_byz" vectors for a Byzantine one. error_* is the probability of ever
// accepting a false chunk; attempts_* the expected number of chunk
// attempts until completion.
struct MdpSolution {
  MdpParams params;
  std::vector<double> error_honest;    // e_0 .. e_v
  std::vector<double> error_byz;       // e'_0 .. e'_v
  std::vector<double> attempts_honest; // q_0 .. q_v
  std::vector<double> attempts_byz;    // q'_0 .. q'_v
  std::vector<ByzDecision> error_decision;   // per state i' (size v)
  std::vector<ByzDecision> length_decision;  // per state i' (size v)

  double total_error() const {
    return (1.0 - params.beta) * error_honest.front() +
           params.beta * error_byz.front();
  }
  double expected_attempts() const {
    return (1.0 - params.beta) * attempts_honest.front() +
           params.beta * attempts_byz.front();
  }
};

// Backward solve of the error recurrences. Each level is affine in
// (e_i, e'_i) for a fixed branch, so the level is solved exactly by a 2x2
// linear solve per branch, taking the branch with the larger value (ties
// resolve to lying). `tol` guards the residual check.
void solve_error_mdp(const MdpParams& params, double tol,
                     std::vector<double>& error_honest,
                     std::vector<double>& error_byz,
                     std::vector<ByzDecision>& decision);

// Same scheme for the expected-attempts recurrences (false accepts count as
// progress there, so there is no absorbing error state).
void solve_length_mdp(const MdpParams& params, double tol,
                      std::vector<double>& attempts_honest,
                      std::vector<double>& attempts_byz,
                      std::vector<ByzDecision>& decision);

MdpSolution solve_mdp(const MdpParams& params, double tol = 1e-9);

}  // namespace byzfusion::analysis

#endif  // BYZFUSION_MDP_HPP
