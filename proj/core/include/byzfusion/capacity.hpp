#ifndef BYZFUSION_CAPACITY_HPP
#define BYZFUSION_CAPACITY_HPP

#include <vector>

#include "byzfusion/dmc.hpp"

namespace byzfusion::channel {

struct CapacityResult {
  double capacity_bits = 0.0;
  std::vector<double> optimal_input;
  // Per-iteration bracket; lower_bits is I(X;Y) for the final input
  // distribution, upper_bits the matching max-divergence bound.
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  std::size_t iterations = 0;
  // Lower-bound trace, one entry per iteration (monotone non-decreasing).
  std::vector<double> lower_trace;
};

// Blahut-Arimoto alternating maximization of I(X;Y). Stops when the
// per-iteration capacity bracket is narrower than `tolerance_bits`.
CapacityResult capacity(const Dmc& dmc, double tolerance_bits = 1e-9);

}  // namespace byzfusion::channel

#endif  // BYZFUSION_CAPACITY_HPP
