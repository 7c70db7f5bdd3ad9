// spectrum.hpp — closed-form spectra of invariant states and the
// normalization constants, cross-checked against direct eigensolves
#pragma once

#include <vector>

#include "qtransport/model.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

struct SpectrumEntry {
  double value = 0.0;   // eigenvalue of the invariant state
  int chain_index = 0;  // n: level offset along the transport chain
  int tau_index = 0;    // k: which eigenpair of tau seeded this entry
  Vector vector;        // normalized Z^n u_k
};

// Nonzero eigenpairs {c lambda_k ||Z^n u_k||^2 e^{sum beta}, Z^n u_k} of the
// invariant state built from tau. tau must be supported in V_1 ⊖ W.
std::vector<SpectrumEntry> invariant_spectrum_from_tau(const ModelSpec& spec,
                                                       const Matrix& tau);

// c = (sum_{k,n} lambda_k ||Z^n u_k||^2 e^{sum beta})^{-1}.
double normalization_constant(const ModelSpec& spec, const Matrix& tau);

// c_beta = (sum_{n=0}^{N-1} e^{sum_{j<=n} beta_j})^{-1}; requires the
// dimension hypothesis (DHViolated otherwise).
double c_beta(const ModelSpec& spec);

struct SpectrumCheckReport {
  double max_deviation = 0.0;      // closed form vs eigensolve, sorted
  int zero_multiplicity = 0;       // eigenvalues below threshold
  int zero_multiplicity_bound = 0; // dim V^perp - 1
  bool pass = false;
};

// Rebuilds sigma(rho) = alpha*(tau-chain) ∪ beta*sigma(eta) ∪ {0, lambda}
// from the convex decomposition and compares against a direct eigensolve.
SpectrumCheckReport spectrum_decomposition_check(const ModelSpec& spec,
                                                 const Matrix& rho);

}  // namespace qtransport
