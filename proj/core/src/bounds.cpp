#include "byzfusion/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json_util.hpp"

namespace byzfusion::analysis {

namespace {

double require_alpha_below_half(double beta, double eps) {
  const double alpha = 1.0 - (1.0 - beta) * (1.0 - eps);
  if (!(alpha < 0.5)) {
    throw std::domain_error(
        "schedule regime: alpha = 1-(1-beta)(1-eps) must be < 1/2 "
        "(requires beta < 1/2 and small eps)");
  }
  return alpha;
}

}  // namespace

double a2_chain_bound(double alpha, std::uint32_t k) {
  if (alpha == 0.0) return 0.0;
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("a2_chain_bound: alpha must lie in [0, 1/2)");
  }
  const double base = 4.0 * alpha * (1.0 - alpha);
  return (1.0 - alpha) / (1.0 - 2.0 * alpha) *
         std::pow(base, static_cast<double>(k) / 2.0);
}

double a2_exact_tail(double alpha, std::uint32_t k) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("a2_exact_tail: alpha must lie in [0, 1]");
  }
  if (k == 0) throw std::invalid_argument("a2_exact_tail: k must be >= 1");
  if (alpha == 0.0) return 0.0;
  const std::uint32_t lo = (k + 1) / 2;  // ceil(k/2)
  // Stable evaluation through log-gamma.
  double tail = 0.0;
  for (std::uint32_t i = k + 1; i-- > lo;) {
    const double log_term = std::lgamma(k + 1.0) - std::lgamma(i + 1.0) -
                            std::lgamma(k - i + 1.0) +
                            i * std::log(alpha) +
                            (k - i) * std::log1p(-alpha);
    tail += std::exp(log_term);
  }
  return std::min(tail, 1.0);
}

std::uint32_t minimal_k(double beta, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("minimal_k: eps must lie in (0, 1)");
  }
  const double alpha = require_alpha_below_half(beta, eps);
  if (alpha == 0.0) return 1;  // any single vote suffices when nothing errs
  const double target = (1.0 - 2.0 * alpha) / (1.0 - alpha) * eps;
  const double k = 2.0 * std::log(target) / std::log(4.0 * alpha * (1.0 - alpha));
  return static_cast<std::uint32_t>(std::max(1.0, std::ceil(k)));
}

std::uint32_t minimal_j(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("minimal_j: eps must lie in (0, 1)");
  }
  return static_cast<std::uint32_t>(std::ceil(1.0 / eps));
}

Lemma1Bounds lemma1_bounds(double beta, double eps, std::uint32_t j,
                           std::uint32_t k) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw std::invalid_argument("lemma1_bounds: eps must lie in [0, 1)");
  }
  if (j < 1 || k < 1) {
    throw std::invalid_argument("lemma1_bounds: j and k must be >= 1");
  }
  Lemma1Bounds bounds;
  bounds.alpha = require_alpha_below_half(beta, eps);
  bounds.pr_a1 = eps;
  bounds.pr_a2_chain = std::min(a2_chain_bound(bounds.alpha, k), 1.0);
  bounds.pr_a2_exact_tail = a2_exact_tail(bounds.alpha, k);
  bounds.pr_a3 = 1.0 / static_cast<double>(j);
  bounds.p1 = std::min(bounds.pr_a1 + bounds.pr_a2_chain, 1.0);
  bounds.p2 = std::min(bounds.pr_a2_chain + bounds.pr_a3, 1.0);
  bounds.p3 = std::min(bounds.pr_a1 * (bounds.pr_a2_chain + bounds.pr_a3), 1.0);
  if (eps > 0.0) {
    bounds.k_min = minimal_k(beta, eps);
    bounds.j_min = minimal_j(eps);
  } else {
    // Degenerate boundary (eps = 0): every bound is already 0; a single
    // verifier and any binning work.
    bounds.k_min = 1;
    bounds.j_min = 1;
  }
  return bounds;
}

ClosedFormF closed_form_f(const MdpParams& params) {
  params.validate();
  if (!(params.p1 < 1.0)) {
    throw std::domain_error("closed_form_f: requires p1 < 1");
  }
  const double p1 = params.p1, p2 = params.p2, p3 = params.p3;
  const double beta = params.beta;
  const auto v = params.chunk_count;

  ClosedFormF out;
  out.slope = p3 / (1.0 - p1) +
              p1 * p2 * beta / ((1.0 - p1) * (1.0 - beta));
  out.f.assign(v + 1, 0.0);
  out.f_byz.assign(v + 1, 0.0);
  for (std::uint32_t i = 0; i <= v; ++i) {
    out.f[i] = out.slope * static_cast<double>(v - i);
    out.f_byz[i] = (i == v) ? 0.0 : out.f[i] + p2 / (1.0 - beta);
  }
  out.pe_bound = out.f[0] + p2 * beta / (1.0 - beta);
  return out;
}

LengthBound length_bound(const MdpParams& params, std::uint64_t block_length,
                         std::uint32_t chunk_count, std::uint32_t verifier_count,
                         std::uint32_t verify_block_length,
                         std::uint32_t message_bits) {
  params.validate();
  if (!(params.p1 < 1.0)) {
    throw std::domain_error("length_bound: requires p1 < 1");
  }
  if (chunk_count == 0 || block_length % chunk_count != 0) {
    throw std::invalid_argument("length_bound: v must divide n");
  }
  const double p1 = params.p1, beta = params.beta;
  LengthBound out;
  out.ev_bound = (1.0 + p1 / ((1.0 - p1) * (1.0 - beta))) *
                     static_cast<double>(chunk_count) +
                 beta / (1.0 - beta);
  const double uses_per_attempt =
      static_cast<double>(block_length / chunk_count) +
      static_cast<double>(verifier_count) * verify_block_length;
  out.en_bound = out.ev_bound * uses_per_attempt;
  out.rate_bound = static_cast<double>(message_bits) / out.en_bound;
  return out;
}

double schedule_pe_display_bound(double eps, double beta) {
  require_alpha_below_half(beta, eps);
  return ((8.0 * beta + 4.0 * (1.0 - beta)) / ((1.0 - 2.0 * eps) * (1.0 - beta)) +
          2.0 * beta / (1.0 - beta)) *
         eps;
}

double schedule_en_display_bound(double eps, double beta, double block_length) {
  require_alpha_below_half(beta, eps);
  return block_length *
         (1.0 + (2.0 * (1.0 + eps) / ((1.0 - 2.0 * eps) * (1.0 - beta)) +
                 beta * (1.0 + eps) / (1.0 - beta) + 1.0) *
                    eps);
}

protocol::ProtocolParams derive_paper_schedule(const ScheduleRequest& request) {
  if (!(request.epsilon > 0.0 && request.epsilon < 0.5)) {
    throw std::invalid_argument(
        "derive_paper_schedule: epsilon must lie in (0, 0.5)");
  }
  if (request.chunk_bits < 1) {
    throw std::invalid_argument("derive_paper_schedule: chunk_bits must be >= 1");
  }
  const double eps = request.epsilon;
  protocol::ProtocolParams params;
  params.code_error = eps;
  params.byzantine_fraction = request.beta;
  params.chunk_count = static_cast<std::uint32_t>(std::ceil(1.0 / eps));
  params.bin_count = std::max<std::uint32_t>(2, minimal_j(eps));

  std::uint32_t k = minimal_k(request.beta, eps);
  if (k % 2 == 0) ++k;  // odd k: no wasted tie vote
  params.verifier_count = k;

  if (request.verify_block_length) {
    params.verify_block_length = *request.verify_block_length;
  } else {
    params.verify_block_length = static_cast<std::uint32_t>(
        std::max(1.0, std::ceil(std::log2(static_cast<double>(params.bin_count)))));
  }

  params.message_bits = params.chunk_count * request.chunk_bits;
  if (params.message_bits > 62) {
    throw std::invalid_argument(
        "derive_paper_schedule: v*chunk_bits exceeds the 62-bit message "
        "limit; raise epsilon or lower chunk_bits");
  }
  const double per_chunk = static_cast<double>(params.verifier_count) *
                           params.verify_block_length / eps;
  params.block_length =
      static_cast<std::uint64_t>(params.chunk_count) *
      static_cast<std::uint64_t>(std::ceil(per_chunk));
  params.validate();
  validate_paper_schedule(params);
  return params;
}

BoundReport make_bound_report(const protocol::ProtocolParams& params) {
  params.validate();
  BoundReport report;
  report.lemma1 = lemma1_bounds(params.byzantine_fraction, params.code_error,
                                params.bin_count, params.verifier_count);
  MdpParams mdp;
  mdp.p1 = report.lemma1.p1;
  mdp.p2 = report.lemma1.p2;
  mdp.p3 = report.lemma1.p3;
  mdp.beta = params.byzantine_fraction;
  mdp.chunk_count = params.chunk_count;

  const auto closed = closed_form_f(mdp);
  report.f_slope = closed.slope;
  report.pe_bound = std::clamp(closed.pe_bound, 0.0, 1.0);

  const auto length = length_bound(mdp, params.block_length, params.chunk_count,
                                   params.verifier_count,
                                   params.verify_block_length,
                                   params.message_bits);
  report.ev_bound = length.ev_bound;
  report.en_bound = length.en_bound;
  report.rate_bound = length.rate_bound;

  const auto solution = solve_mdp(mdp);
  report.mdp_pe = solution.total_error();
  report.mdp_expected_attempts = solution.expected_attempts();
  report.mdp_error_decision = solution.error_decision;
  return report;
}

std::string BoundReport::to_json_string() const {
  detail::json doc;
  doc["alpha"] = lemma1.alpha;
  doc["pr_a1"] = lemma1.pr_a1;
  doc["pr_a2_chain"] = lemma1.pr_a2_chain;
  doc["pr_a2_exact_tail"] = lemma1.pr_a2_exact_tail;
  doc["pr_a3"] = lemma1.pr_a3;
  doc["p1"] = lemma1.p1;
  doc["p2"] = lemma1.p2;
  doc["p3"] = lemma1.p3;
  doc["k_min"] = lemma1.k_min;
  doc["j_min"] = lemma1.j_min;
  doc["f_slope"] = f_slope;
  doc["pe_bound"] = pe_bound;
  doc["ev_bound"] = ev_bound;
  doc["en_bound"] = en_bound;
  doc["rate_bound_bits_per_use"] = rate_bound;
  doc["mdp_pe"] = mdp_pe;
  doc["mdp_expected_attempts"] = mdp_expected_attempts;
  std::string decisions;
  decisions.reserve(mdp_error_decision.size());
  for (auto d : mdp_error_decision) {
    decisions.push_back(d == ByzDecision::kLie ? 'L' : 'T');
  }
  doc["mdp_error_decision"] = decisions;
  return doc.dump(2);
}

}  // namespace byzfusion::analysis
