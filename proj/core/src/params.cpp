#include "byzfusion/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "byzfusion/bounds.hpp"

namespace byzfusion::protocol {

void ProtocolParams::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("ProtocolParams: " + what);
  };
  if (message_bits < 1) fail("message_bits must be >= 1");
  if (message_bits > 62) fail("message_bits must be <= 62 (64-bit messages)");
  if (chunk_count < 1) fail("chunk_count must be >= 1");
  if (message_bits % chunk_count != 0) {
    fail("chunk_count must divide message_bits evenly");
  }
  if (block_length < 1) fail("block_length must be >= 1");
  if (block_length % chunk_count != 0) {
    fail("chunk_count must divide block_length evenly");
  }
  if (bin_count < 2) fail("bin_count must be >= 2");
  if (verifier_count < 1) fail("verifier_count must be >= 1");
  if (verify_block_length < 1) fail("verify_block_length must be >= 1");
  if (!(code_error >= 0.0 && code_error < 1.0)) {
    fail("code_error must lie in [0, 1)");
  }
  if (!(byzantine_fraction >= 0.0 && byzantine_fraction < 1.0)) {
    fail("byzantine_fraction must lie in [0, 1)");
  }
  if (max_attempts < 1) fail("max_attempts must be >= 1");
  if (finite_pool && *finite_pool < 1) fail("finite_pool must be >= 1");
  if (finite_pool && *finite_pool < verifier_count) {
    fail("finite_pool must be >= verifier_count for without-replacement polls");
  }
}

void validate_paper_schedule(const ProtocolParams& params) {
  params.validate();
  const double eps = params.code_error;
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("paper schedule: " + what);
  };
  if (!(eps > 0.0)) fail("requires code_error > 0");

  const double v = params.chunk_count;
  if (!(v >= 1.0 / eps - 1e-9 && v <= 2.0 / eps + 1e-9)) {
    std::ostringstream msg;
    msg << "chunk_count " << params.chunk_count << " outside [1/eps, 2/eps] = ["
        << 1.0 / eps << ", " << 2.0 / eps << "]";
    fail(msg.str());
  }
  const double klv = static_cast<double>(params.verifier_count) *
                     params.verify_block_length * v;
  if (static_cast<double>(params.block_length) < klv / eps - 1e-9) {
    fail("block_length must be >= k*l*v/eps");
  }
  if (params.bin_count < 1.0 / eps - 1e-9) {
    fail("bin_count must be >= 1/eps");
  }
  // Throws a domain_error naming the regime when alpha >= 1/2.
  const auto k_needed =
      analysis::minimal_k(params.byzantine_fraction, eps);
  if (params.verifier_count < k_needed) {
    std::ostringstream msg;
    msg << "verifier_count " << params.verifier_count
        << " below the required minimum " << k_needed;
    fail(msg.str());
  }
}

}  // namespace byzfusion::protocol
