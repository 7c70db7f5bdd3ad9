#include "qtransport/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/transport.hpp"

namespace qtransport {

namespace {

struct TauEig {
  std::vector<double> values;
  std::vector<Vector> vectors;
};

// Nonzero eigenpairs of tau, threshold 1e-12 relative to the top eigenvalue.
TauEig tau_eigenpairs(const ModelSpec& spec, const Matrix& tau) {
  const Matrix p = v1_minus_w(spec).projector();
  if ((tau - p * tau * p).norm() > tol::support) {
    throw SupportViolation("spectrum: tau not supported in V_1 ⊖ W");
  }
  auto eig = hermitian_eig(tau, 1e-8);
  const double top = eig.values(eig.values.size() - 1);
  TauEig out;
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > 1e-12 * top) {
      out.values.push_back(eig.values(i));
      out.vectors.push_back(eig.vectors.col(i));
    }
  }
  return out;
}

}  // namespace

std::vector<SpectrumEntry> invariant_spectrum_from_tau(const ModelSpec& spec,
                                                       const Matrix& tau) {
  const TauEig eig = tau_eigenpairs(spec, tau);
  const Matrix z = transport_operator(spec);
  const double c = normalization_constant(spec, tau);

  std::vector<SpectrumEntry> entries;
  for (size_t k = 0; k < eig.values.size(); ++k) {
    Vector chained = eig.vectors[k];
    for (int n = 0; n < spec.num_levels; ++n) {
      if (n > 0) chained = z * chained;
      const double norm2 = chained.squaredNorm();
      SpectrumEntry entry;
      entry.value = c * eig.values[k] * norm2 * spec.beta_prefix_exp(n);
      entry.chain_index = n;
      entry.tau_index = static_cast<int>(k);
      entry.vector = chained / chained.norm();
      entries.push_back(std::move(entry));
    }
  }
  return entries;
}

double normalization_constant(const ModelSpec& spec, const Matrix& tau) {
  const TauEig eig = tau_eigenpairs(spec, tau);
  const Matrix z = transport_operator(spec);
  double sum = 0.0;
  for (size_t k = 0; k < eig.values.size(); ++k) {
    Vector chained = eig.vectors[k];
    for (int n = 0; n < spec.num_levels; ++n) {
      if (n > 0) chained = z * chained;
      sum += eig.values[k] * chained.squaredNorm() * spec.beta_prefix_exp(n);
    }
  }
  if (sum <= 0.0) {
    throw SupportViolation("normalization_constant: vanishing chain sum");
  }
  return 1.0 / sum;
}

double c_beta(const ModelSpec& spec) {
  if (!spec.dimension_hypothesis()) {
    throw DHViolated("c_beta requires dim E_2 = ... = dim E_N");
  }
  double sum = 0.0;
  for (int n = 0; n < spec.num_levels; ++n) {
    sum += spec.beta_prefix_exp(n);
  }
  return 1.0 / sum;
}

SpectrumCheckReport spectrum_decomposition_check(const ModelSpec& spec,
                                                 const Matrix& rho) {
  const InvariantDecomposition dec = decompose_invariant(spec, rho);
  const Index d = spec.total_dim;

  std::vector<double> closed;
  if (dec.tau) {
    for (const auto& entry : invariant_spectrum_from_tau(spec, *dec.tau)) {
      closed.push_back(dec.alpha * entry.value);
    }
  }
  if (dec.eta) {
    auto eig = hermitian_eig(*dec.eta, 1e-8);
    for (Index i = 0; i < eig.values.size(); ++i) {
      if (eig.values(i) > 1e-12) closed.push_back(dec.beta * eig.values(i));
    }
  }
  if (dec.lambda > 0.0) closed.push_back(dec.lambda);
  while (closed.size() < static_cast<size_t>(d)) closed.push_back(0.0);
  std::sort(closed.begin(), closed.end());

  auto eig = hermitian_eig(rho, 1e-8);
  SpectrumCheckReport report;
  for (Index i = 0; i < d; ++i) {
    report.max_deviation = std::max(
        report.max_deviation,
        std::abs(eig.values(i) - closed[static_cast<size_t>(i)]));
  }

  const int dim_v = harmonic_subspace_v(spec).dim();
  report.zero_multiplicity_bound = static_cast<int>(d) - dim_v - 1;
  for (Index i = 0; i < d; ++i) {
    if (std::abs(eig.values(i)) <= 1e-10) ++report.zero_multiplicity;
  }
  report.pass = report.max_deviation <= 1e-10 &&
                report.zero_multiplicity >= report.zero_multiplicity_bound;
  return report;
}

}  // namespace qtransport
