// invariants.hpp — structural subspaces (W, V, V_k, R_L), construction and
// decomposition of invariant states, and the numeric steady-state oracle
#pragma once

#include <optional>
#include <vector>

#include "qtransport/lindblad.hpp"
#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

// W = span{phi_{a_1}}_{a=n_2}^{n_1-1}, the interaction-free subspace.
SubspaceBasis interaction_free_subspace(const ModelSpec& spec);

// V = {Z^n|0_0>, Z†^n|0_{N+1}>, Z†^{s}phi_{0_{2m+1}}}^perp. The removed
// family may be linearly dependent; it is orthonormalized with a rank
// tolerance before taking the complement.
SubspaceBasis harmonic_subspace_v(const ModelSpec& spec);

// V_k = P_k V, k = 1..N.
SubspaceBasis v_level(const ModelSpec& spec, int k);

// V_1 = P_1 V.
SubspaceBasis v1_subspace(const ModelSpec& spec);

// V_1 ⊖ W, the carrier of the level-1 seed states tau.
SubspaceBasis v1_minus_w(const ModelSpec& spec);

// V ⊕ C|0_{N+1}>, the fast recurrent subspace.
SubspaceBasis fast_recurrent_subspace(const ModelSpec& spec);

// Residuals of the transport identities Z^j V_k = V_{k+j} and
// V = ⊕_j Z^j V_1, reported as principal angles (all should be ~0).
std::vector<double> transport_level_identities(const ModelSpec& spec);

// sum_{n=0}^{N-1} e^{sum beta} Z^n tau Z†^n, unnormalized and without any
// support checking (the raw transport chain).
Matrix transport_chain_sum(const ModelSpec& spec, const Matrix& tau);

// rho = c sum_n e^{sum beta} Z^n tau Z†^n with c fixed by tr rho = 1.
// tau must be a state supported in V_1 ⊖ W (SupportViolation otherwise).
Matrix build_invariant_from_tau(const ModelSpec& spec, const Matrix& tau);

// The extremal invariant state seeded by u ∈ V_1 ⊖ W (normalized
// internally; ZeroVector/SupportViolation on bad input).
Matrix extremal_invariant_from_vector(const ModelSpec& spec, const Vector& u);

// Convex decomposition rho = alpha * (tau-chain) + beta * eta + lambda * P_{N+1}.
struct InvariantDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double c = 0.0;                // alpha^{-1} tr(rho |Z_1|) when alpha > 0
  std::optional<Matrix> tau;     // state on V_1 ⊖ W, absent when alpha = 0
  std::optional<Matrix> eta;     // state on W, absent when beta = 0
  double reconstruction_residual = 0.0;
};

InvariantDecomposition decompose_invariant(const ModelSpec& spec,
                                           const Matrix& rho);

bool is_invariant(const ModelSpec& spec, const Matrix& rho,
                  double tolerance = tol::invariant);

// ||rho Z_k - e^{beta_k} Z_k rho||_F for k = 1..N-1.
std::vector<double> detailed_balance_check(const ModelSpec& spec,
                                           const Matrix& rho);

// <phi_{0_1}, rho phi_{0_1}> <= 1e-12.
bool is_dark(const ModelSpec& spec, const Matrix& rho);

struct SteadyStateResult {
  Matrix state;           // invariant state with maximal support
  SubspaceBasis kernel;   // ker of the Liouvillian, ambient d^2
  SubspaceBasis support;  // support of `state`, ambient d
  double spectral_gap;    // distance from 0 to the nearest nonzero eigenvalue
};

// Independent oracle: spectral projector of the Liouvillian onto its zero
// eigenspace applied to the maximally mixed state, PSD-clipped and
// renormalized. Raises ProjectorFailure when the zero group is not
// separated from the rest of the spectrum by 1e-8.
SteadyStateResult numeric_steady_state(const ModelSpec& spec);

// Frobenius-orthonormal basis of the commutant {Z_k, Z_k†}' (ambient d^2).
SubspaceBasis commutant_c0(const ModelSpec& spec);

}  // namespace qtransport
