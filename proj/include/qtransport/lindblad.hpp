// lindblad.hpp — the GKSL generator, its dual, Kraus operators, the
// effective Hamiltonian and the vectorized Liouvillian
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtransport/model.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

// d^2 x d^2 matrix acting on column-stacked operators: the map
// X -> A X B is represented by (B^T ⊗ A).
struct Superoperator {
  int dim = 0;     // d, the operator edge length
  Matrix matrix;   // d^2 x d^2
};

// Column-stacking vectorization and its inverse.
Vector vec(const Matrix& x);
Matrix devec(const Vector& v, Index d);

Matrix kron(const Matrix& a, const Matrix& b);

// L_{-,omega_k} = sqrt(G_{-,k}) Z_k and L_{+,omega_k} = sqrt(G_{+,k}) Z_k†,
// labeled "-,k" / "+,k"; the "+,N" entry is the zero matrix.
std::vector<std::pair<std::string, Matrix>> kraus_operators(
    const ModelSpec& spec);

// H_eff = sum_k (gamma_{-,k} Z_k†Z_k - gamma_{+,k} Z_k Z_k†).
Matrix effective_hamiltonian(const ModelSpec& spec);

// Schrodinger-picture generator in the rewritten multiplier + jump form.
// This is the production path; apply_generator_gksl is the cross-check.
Matrix apply_generator(const ModelSpec& spec, const Matrix& rho);

// Raw GKSL form: -i[Delta_k, rho] + dissipators, summed over k.
Matrix apply_generator_gksl(const ModelSpec& spec, const Matrix& rho);

// Heisenberg-picture dual: tr(L(rho) x) = tr(rho L*(x)), L*(I) = 0.
Matrix apply_dual(const ModelSpec& spec, const Matrix& x);

// Matrix form of apply_generator on the vectorized space.
Superoperator liouvillian_matrix(const ModelSpec& spec);

// phi(rho) = n_1 (G_{+,0} P_phi rho P_phi + eta_{+,0} P_phi rho
//            + conj(eta_{+,0}) rho P_phi), P_phi the bright projector.
Matrix phi_map(const ModelSpec& spec, const Matrix& rho);

// delta_H^0 = X, delta_H^{n+1} = [H_eff, delta_H^n(X)].
Matrix iterated_commutator(const ModelSpec& spec, const Matrix& x, int n);

// Choi matrix of the map represented by `op` (blocks op(|i><j|)).
Matrix choi_matrix(const Superoperator& op);

}  // namespace qtransport
