// model.hpp — model parameterization, level layout, canonical/entangled bases
#pragma once

#include <string>
#include <vector>

#include "qtransport/types.hpp"

namespace qtransport {

// Parameterization of the N-level chain. Levels are indexed k = 0..N+1 and
// stored contiguously in increasing k, so level k occupies the coordinate
// block [offset(k), offset(k) + dim(k)). All derived quantities are filled
// in by validate_spec; constructors elsewhere require a validated spec.
struct ModelSpec {
  int num_levels = 0;                // N, the number of intermediate levels
  std::vector<int> dims;             // n_0 .. n_{N+1}
  std::vector<double> energies;      // eps_0 .. eps_{N+1}, strictly decreasing
  std::vector<double> gamma_minus;   // Gamma_{-,omega_k}, k = 0..N
  std::vector<double> gamma_plus;    // Gamma_{+,omega_k}, k = 0..N (last is 0)
  std::vector<double> shift_minus;   // gamma_{-,omega_k} Hamiltonian shifts
  std::vector<double> shift_plus;    // gamma_{+,omega_k}

  // Derived (populated by validate_spec).
  std::vector<double> bohr;          // omega_k = eps_k - eps_{k+1}
  std::vector<double> beta;          // beta_0 = 0, beta_k = ln(G-/G+), k < N
  std::vector<Complex> eta_minus;    // -G/2 + i*shift
  std::vector<Complex> eta_plus;     // ditto, with eta_{+,omega_N} = i*shift
  std::vector<int> offsets;          // block offsets, size N+3, last = d
  int total_dim = 0;                 // d = sum of dims
  bool validated = false;

  int level_count() const { return num_levels + 2; }
  int level_dim(int k) const { return dims[static_cast<size_t>(k)]; }
  int offset(int k) const { return offsets[static_cast<size_t>(k)]; }

  // dim E_2 = ... = dim E_N (trivially true for N = 1).
  bool dimension_hypothesis() const;

  // e^{sum_{j=0}^{n} beta_j}; n ranges over 0..N-1, beta_0 = 0.
  double beta_prefix_exp(int n) const;
};

// Checks all structural hypotheses, fixes the block layout and fills in the
// derived constants. Throws ValidationError with kinds DimensionOrder,
// BoundaryDim, EnergyOrder, BohrCollision, RateSign.
ModelSpec validate_spec(ModelSpec raw);

// |a_k>: unit coordinate vector of the a-th canonical vector in level k.
Vector canonical_vector(const ModelSpec& spec, int k, int a);

// phi_{a_k} = n_k^{-1/2} sum_b zeta_k^{-ab} |b_k>, zeta_k = exp(2 pi i / n_k).
Vector entangled_vector(const ModelSpec& spec, int k, int a);

// P_k, the diagonal 0/1 projector onto level k.
Matrix level_projector(const ModelSpec& spec, int k);

namespace detail {
void require_level(const ModelSpec& spec, int k);
void require_level_index(const ModelSpec& spec, int k, int a);
}  // namespace detail

}  // namespace qtransport
