#include "qtransport/presets.hpp"

#include <cmath>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/transport.hpp"

namespace qtransport {

namespace {

// Distinct gaps (N+1, N, ..., 1) descending to zero keep the Bohr
// frequencies pairwise different without user input.
std::vector<double> auto_energies(int num_levels) {
  std::vector<double> eps(static_cast<size_t>(num_levels) + 2, 0.0);
  double acc = 0.0;
  for (int k = num_levels; k >= 0; --k) {
    acc += static_cast<double>(num_levels + 1 - k);
    eps[static_cast<size_t>(k)] = acc;
  }
  return eps;
}

ModelSpec chain_model(int num_levels, std::vector<int> dims,
                      const PresetRates& rates) {
  ModelSpec raw;
  raw.num_levels = num_levels;
  raw.dims = std::move(dims);
  raw.energies = auto_energies(num_levels);
  raw.gamma_minus = rates.gamma_minus;
  raw.gamma_plus = rates.gamma_plus;
  raw.shift_minus = rates.shift_minus;
  raw.shift_plus = rates.shift_plus;
  return validate_spec(std::move(raw));
}

}  // namespace

PresetRates default_rates(int num_levels) {
  const size_t count = static_cast<size_t>(num_levels) + 1;
  PresetRates rates;
  rates.gamma_minus.assign(count, 1.0);
  rates.gamma_plus.assign(count, 0.5);
  rates.gamma_plus.back() = 0.0;
  rates.shift_minus.assign(count, 0.1);
  rates.shift_plus.assign(count, 0.1);
  return rates;
}

ModelSpec kv_model(int n1, const PresetRates& rates) {
  return chain_model(1, {1, n1, 1}, rates);
}

ModelSpec kv_model(int n1) {
  // The closing upward shift gamma_{+,omega_1} rotates coherences between
  // the interaction-free part and the sink; the studied single-level model
  // carries no such term, and dropping it keeps every state on W ⊕ C|0_2>
  // invariant.
  PresetRates rates = default_rates(1);
  rates.shift_plus.back() = 0.0;
  return kv_model(n1, rates);
}

ModelSpec avk_model(int n1, int n2, const PresetRates& rates) {
  return chain_model(2, {1, n1, n2, 1}, rates);
}

ModelSpec avk_model(int n1, int n2) {
  return avk_model(n1, n2, default_rates(2));
}

Matrix avk_limit_formula(const ModelSpec& spec, AvkVariant variant,
                         const Vector& u) {
  if (spec.num_levels != 2) {
    throw DHViolated("avk_limit_formula: model is not a two-level chain");
  }
  if (u.size() != spec.total_dim) {
    throw ShapeMismatch("avk_limit_formula: wrong vector length");
  }
  const double eb1 = std::exp(spec.beta[1]);
  const double expected_norm = 1.0 / std::sqrt(1.0 + eb1);
  if (std::abs(u.norm() - expected_norm) > 1e-10) {
    throw NormViolation("avk_limit_formula: seed must have norm (1+e^b)^-1/2, got " +
                        std::to_string(u.norm()));
  }

  const Matrix z1 = transition_operator(spec, 1);
  const int level = variant == AvkVariant::Level1 ? 1 : 2;
  const SubspaceBasis carrier = variant == AvkVariant::Level1
                                    ? v1_minus_w(spec)
                                    : v_level(spec, 2);
  const Matrix pc = carrier.projector();
  if ((u - pc * u).norm() > tol::support) {
    throw SupportViolation("avk_limit_formula: seed leaks outside the level-" +
                           std::to_string(level) + " difference span");
  }

  const Matrix pure = u * u.adjoint();
  if (variant == AvkVariant::Level1) {
    return pure + eb1 * (z1 * pure * z1.adjoint());
  }
  return eb1 * pure + z1.adjoint() * pure * z1;
}

}  // namespace qtransport
