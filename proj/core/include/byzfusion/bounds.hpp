#ifndef BYZFUSION_BOUNDS_HPP
#define BYZFUSION_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "byzfusion/mdp.hpp"
#include "byzfusion/params.hpp"

namespace byzfusion::analysis {

// Analytic upper bounds on the per-attempt event probabilities. alpha is
// the worst-case probability that one verification response decodes to
// something other than the true chunk's bin: alpha = 1-(1-beta)(1-eps).
struct Lemma1Bounds {
  double alpha = 0.0;
  double pr_a1 = 0.0;            // decode error in the chunk step, <= eps
  double pr_a2_chain = 0.0;      // geometric/binomial chain bound
  double pr_a2_exact_tail = 0.0; // exact binomial tail (sharper)
  double pr_a3 = 0.0;            // bin collision, exactly 1/j
  double p1 = 0.0;               // <= pr_a1 + pr_a2
  double p2 = 0.0;               // <= pr_a2 + pr_a3
  double p3 = 0.0;               // <= pr_a1 (pr_a2 + pr_a3)
  std::uint32_t k_min = 0;       // smallest k with the chain bound <= eps
  std::uint32_t j_min = 0;       // ceil(1/eps)
};

// Requires alpha < 1/2 (attainable only when beta < 1/2); throws a
// std::domain_error naming the regime otherwise.
Lemma1Bounds lemma1_bounds(double beta, double eps, std::uint32_t j,
                           std::uint32_t k);

// ((1-a)/(1-2a)) * (4a(1-a))^(k/2); zero when a == 0.
double a2_chain_bound(double alpha, std::uint32_t k);
// Sum_{i >= ceil(k/2)} C(k,i) a^i (1-a)^(k-i): majority-failure tail, the
// ceil index reads the even-k half-count as strict-majority failure.
double a2_exact_tail(double alpha, std::uint32_t k);
std::uint32_t minimal_k(double beta, double eps);
std::uint32_t minimal_j(double eps);

// Closed-form f_i = (p3/(1-p1) + p1 p2 beta/((1-p1)(1-beta))) (v-i) and
// f'_i = f_i + p2/(1-beta), with the session error bound
// P_e <= f_0 + p2 beta/(1-beta).
struct ClosedFormF {
  std::vector<double> f;        // f_0 .. f_v
  std::vector<double> f_byz;    // f'_0 .. f'_v  (f'_v = 0)
  double slope = 0.0;
  double pe_bound = 0.0;        // f_0 + p2 beta/(1-beta), unclamped
};

ClosedFormF closed_form_f(const MdpParams& params);

struct LengthBound {
  double ev_bound = 0.0;    // (1 + p1/((1-p1)(1-beta))) v + beta/(1-beta)
  double en_bound = 0.0;    // ev_bound * (n/v + k*l)
  double rate_bound = 0.0;  // message_bits / en_bound
};

LengthBound length_bound(const MdpParams& params, std::uint64_t block_length,
                         std::uint32_t chunk_count, std::uint32_t verifier_count,
                         std::uint32_t verify_block_length,
                         std::uint32_t message_bits);

// The closed displays obtained by plugging the schedule constraints in:
//   P_e <= ((8b + 4(1-b))/((1-2e)(1-b)) + 2b/(1-b)) e
//   E(N) <= n [1 + (2(1+e)/((1-2e)(1-b)) + b(1+e)/(1-b) + 1) e]
double schedule_pe_display_bound(double eps, double beta);
double schedule_en_display_bound(double eps, double beta, double block_length);

// Derives protocol parameters from a target code error following the rate
// analysis: v = j = ceil(1/eps), k = minimal k rounded up to odd (even k
// wastes one vote on the tie), l = ceil(log2 j) unless given, and
// n = v * ceil(k*l/eps). Each chunk carries `chunk_bits` bits.
struct ScheduleRequest {
  double epsilon = 0.05;
  double beta = 0.0;
  std::uint32_t chunk_bits = 1;
  std::optional<std::uint32_t> verify_block_length;
};

protocol::ProtocolParams derive_paper_schedule(const ScheduleRequest& request);

// Everything `analyze` reports for one configuration.
struct BoundReport {
  Lemma1Bounds lemma1;
  double f_slope = 0.0;
  double pe_bound = 0.0;    // clamped to [0, 1]
  double ev_bound = 0.0;
  double en_bound = 0.0;
  double rate_bound = 0.0;  // bits per channel use
  // MDP solution at the bound p-values (worst case consistent with the
  // analysis).
  double mdp_pe = 0.0;
  double mdp_expected_attempts = 0.0;
  std::vector<ByzDecision> mdp_error_decision;

  std::string to_json_string() const;
};

BoundReport make_bound_report(const protocol::ProtocolParams& params);

}  // namespace byzfusion::analysis

#endif  // BYZFUSION_BOUNDS_HPP
