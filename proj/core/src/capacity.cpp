#include "byzfusion/capacity.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace byzfusion::channel {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr std::size_t kMaxIterations = 1000000;
}

CapacityResult capacity(const Dmc& dmc, double tolerance_bits) {
  if (!(tolerance_bits > 0.0)) {
    throw std::invalid_argument("capacity: tolerance must be > 0");
  }
  const std::size_t nx = dmc.input_size();
  const std::size_t ny = dmc.output_size();
  const double tol_nats = tolerance_bits * kLn2;

  std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> r(ny, 0.0);
  std::vector<double> d(nx, 0.0);  // D(q(.|x) || r)

  CapacityResult result;
  double lower = 0.0, upper = 0.0;
  for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
    std::fill(r.begin(), r.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) r[y] += p[x] * dmc.prob(y, x);
    }
    for (std::size_t x = 0; x < nx; ++x) {
      double acc = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        const double q = dmc.prob(y, x);
        if (q > 0.0) acc += q * std::log(q / r[y]);
      }
      d[x] = acc;
    }
    lower = 0.0;
    upper = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < nx; ++x) {
      lower += p[x] * d[x];
      upper = std::max(upper, d[x]);
    }
    result.lower_trace.push_back(lower / kLn2);
    result.iterations = iter;
    if (upper - lower < tol_nats) break;

    // p'(x) proportional to p(x) exp(D_x).
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      p[x] *= std::exp(d[x] - upper);  // shift by max for stability
      norm += p[x];
    }
    for (std::size_t x = 0; x < nx; ++x) p[x] /= norm;
  }
  if (result.iterations == kMaxIterations && upper - lower >= tol_nats) {
    throw std::runtime_error("capacity: Blahut-Arimoto did not converge");
  }

  result.lower_bits = lower / kLn2;
  result.upper_bits = upper / kLn2;
  result.capacity_bits = 0.5 * (result.lower_bits + result.upper_bits);
  if (result.capacity_bits < 0.0 && result.capacity_bits > -tolerance_bits) {
    result.capacity_bits = 0.0;  // clamp tiny negative round-off
  }
  result.optimal_input = std::move(p);
  return result;
}

}  // namespace byzfusion::channel
