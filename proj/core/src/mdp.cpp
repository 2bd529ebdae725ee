#include "byzfusion/mdp.hpp"

#include <cmath>
#include <stdexcept>

namespace byzfusion::analysis {

namespace {

constexpr double kSingularGuard = 1e-13;

struct LevelSolution {
  double honest;  // value at state i
  double byz;     // value at state i'
};

// Solves the 2x2 affine system
//   x = ax + bx * x + cx * y
//   y = ay + by * x + cy * y
// for x (honest-state value) and y (byz-state value).
LevelSolution solve_affine_pair(double ax, double bx, double cx, double ay,
                                double by, double cy) {
  const double m00 = 1.0 - bx, m01 = -cx;
  const double m10 = -by, m11 = 1.0 - cy;
  const double det = m00 * m11 - m01 * m10;
  if (std::abs(det) < kSingularGuard) {
    throw std::domain_error(
        "mdp: degenerate parameters (level equations are singular; e.g. "
        "p1 = 1 with beta = 1)");
  }
  return {(ax * m11 - m01 * ay) / det, (m00 * ay - ax * by) / det};
}

}  // namespace

void MdpParams::validate() const {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(p1) || !in_unit(p2) || !in_unit(p3)) {
    throw std::invalid_argument("MdpParams: p1, p2, p3 must lie in [0, 1]");
  }
  if (p1 + p3 > 1.0 + 1e-12) {
    throw std::invalid_argument("MdpParams: p1 + p3 must be <= 1");
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("MdpParams: beta must lie in [0, 1)");
  }
  if (chunk_count < 1) {
    throw std::invalid_argument("MdpParams: chunk_count must be >= 1");
  }
}

void solve_error_mdp(const MdpParams& params, double tol,
                     std::vector<double>& error_honest,
                     std::vector<double>& error_byz,
                     std::vector<ByzDecision>& decision) {
  params.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("solve_error_mdp: tol must be > 0");
  const auto v = params.chunk_count;
  const double p1 = params.p1, p2 = params.p2, p3 = params.p3;
  const double beta = params.beta;

  error_honest.assign(v + 1, 0.0);
  error_byz.assign(v + 1, 0.0);
  decision.assign(v, ByzDecision::kLie);

  for (std::uint32_t i = v; i-- > 0;) {
    const double e_next = error_honest[i + 1];
    const double ep_next = error_byz[i + 1];

    // Honest-state equation, shared by both branches:
    //   e_i = p3 + (1-p1-p3) e_{i+1} + p1 beta e'_i + p1 (1-beta) e_i
    const double ax = p3 + (1.0 - p1 - p3) * e_next;
    const double bx = p1 * (1.0 - beta);
    const double cx = p1 * beta;

    // Lie branch: e'_i = p2 + (1-p2) beta e'_i + (1-p2)(1-beta) e_i
    const auto lie = solve_affine_pair(ax, bx, cx, p2, (1.0 - p2) * (1.0 - beta),
                                       (1.0 - p2) * beta);
    // Truth branch: e'_i = p3 + (1-p1-p3) e'_{i+1} + p1 beta e'_i
    //                      + p1 (1-beta) e_i
    const auto truth = solve_affine_pair(ax, bx, cx,
                                         p3 + (1.0 - p1 - p3) * ep_next,
                                         p1 * (1.0 - beta), p1 * beta);

    if (lie.byz >= truth.byz) {
      decision[i] = ByzDecision::kLie;
      error_honest[i] = lie.honest;
      error_byz[i] = lie.byz;
    } else {
      decision[i] = ByzDecision::kTruth;
      error_honest[i] = truth.honest;
      error_byz[i] = truth.byz;
    }
    // Residual check: the level values must satisfy the honest equation.
    const double residual =
        std::abs(error_honest[i] -
                 (ax + bx * error_honest[i] + cx * error_byz[i]));
    if (!(residual < tol)) {
      throw std::domain_error("solve_error_mdp: residual exceeds tolerance");
    }
  }
}

void solve_length_mdp(const MdpParams& params, double tol,
                      std::vector<double>& attempts_honest,
                      std::vector<double>& attempts_byz,
                      std::vector<ByzDecision>& decision) {
  params.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("solve_length_mdp: tol must be > 0");
  const auto v = params.chunk_count;
  const double p1 = params.p1, p2 = params.p2;
  const double beta = params.beta;

  attempts_honest.assign(v + 1, 0.0);
  attempts_byz.assign(v + 1, 0.0);
  decision.assign(v, ByzDecision::kLie);

  for (std::uint32_t i = v; i-- > 0;) {
    const double q_next = attempts_honest[i + 1];
    const double qp_next = attempts_byz[i + 1];

    // q_i = 1 + (1-p1) q_{i+1} + p1 beta q'_i + p1 (1-beta) q_i
    const double ax = 1.0 + (1.0 - p1) * q_next;
    const double bx = p1 * (1.0 - beta);
    const double cx = p1 * beta;

    // Lie branch: q'_i = 1 + p2 q'_{i+1} + (1-p2) beta q'_i
    //                    + (1-p2)(1-beta) q_i
    const auto lie = solve_affine_pair(ax, bx, cx, 1.0 + p2 * qp_next,
                                       (1.0 - p2) * (1.0 - beta),
                                       (1.0 - p2) * beta);
    // Truth branch: q'_i = 1 + (1-p1) q'_{i+1} + p1 beta q'_i
    //                      + p1 (1-beta) q_i
    const auto truth = solve_affine_pair(ax, bx, cx, 1.0 + (1.0 - p1) * qp_next,
                                         p1 * (1.0 - beta), p1 * beta);

    if (lie.byz >= truth.byz) {
      decision[i] = ByzDecision::kLie;
      attempts_honest[i] = lie.honest;
      attempts_byz[i] = lie.byz;
    } else {
      decision[i] = ByzDecision::kTruth;
      attempts_honest[i] = truth.honest;
      attempts_byz[i] = truth.byz;
    }
    const double residual =
        std::abs(attempts_honest[i] -
                 (ax + bx * attempts_honest[i] + cx * attempts_byz[i]));
    if (!(residual < tol * std::max(1.0, attempts_honest[i]))) {
      throw std::domain_error("solve_length_mdp: residual exceeds tolerance");
    }
  }
}

MdpSolution solve_mdp(const MdpParams& params, double tol) {
  MdpSolution solution;
  solution.params = params;
  solve_error_mdp(params, tol, solution.error_honest, solution.error_byz,
                  solution.error_decision);
  solve_length_mdp(params, tol, solution.attempts_honest,
                   solution.attempts_byz, solution.length_decision);
  return solution;
}

}  // namespace byzfusion::analysis
