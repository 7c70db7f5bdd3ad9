// numerics.hpp — dense complex linear-algebra kernel shared by every module
#pragma once

#include <utility>
#include <vector>

#include "qtransport/types.hpp"

namespace qtransport {

// Orthonormal spanning set of a subspace; vectors are the columns.
struct SubspaceBasis {
  Index ambient_dim = 0;
  Matrix vectors;  // ambient_dim x dim, orthonormal columns

  SubspaceBasis() = default;
  SubspaceBasis(Index ambient, Matrix cols)
      : ambient_dim(ambient), vectors(std::move(cols)) {}

  static SubspaceBasis empty(Index ambient) {
    return {ambient, Matrix::Zero(ambient, 0)};
  }

  int dim() const { return static_cast<int>(vectors.cols()); }

  // Orthogonal projector onto the subspace.
  Matrix projector() const { return vectors * vectors.adjoint(); }

  // Largest deviation of the Gram matrix from the identity.
  double gram_defect() const;
};

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns, matching order
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (A + A†)/2 first; asymmetry beyond herm_tol (relative to max(1, ||A||_F))
// raises NotHermitian.
EigResult hermitian_eig(const Matrix& a, double herm_tol = tol::hermiticity);

// e^{tA} by scaling-and-squaring with a diagonal Pade approximant.
Matrix matrix_exp(const Matrix& a, double t = 1.0);

// Orthonormal basis of the right singular subspace with singular values
// <= rel_tol * sigma_max. The empty basis is a valid return.
SubspaceBasis null_space(const Matrix& a, double rel_tol = tol::rank);

// Rank from the same SVD decision rule as null_space.
int numeric_rank(const Matrix& a, double rel_tol = tol::rank);

// Orthonormal basis of the column span of `columns` (rank-tolerant).
SubspaceBasis orthonormalize(Index ambient, const Matrix& columns,
                             double rel_tol = tol::rank);

// Orthogonal complement within the ambient space.
SubspaceBasis complement(const SubspaceBasis& s, double rel_tol = tol::rank);

// A ⊖ B: the part of A orthogonal to B (meaningful when B ⊆ A).
SubspaceBasis relative_complement(const SubspaceBasis& a,
                                  const SubspaceBasis& b,
                                  double rel_tol = tol::rank);

// Span of the union of the given subspaces.
SubspaceBasis join(const std::vector<SubspaceBasis>& parts,
                   double rel_tol = tol::rank);

// Largest principal angle between two subspaces of the same ambient space,
// computed from the singular values of the cross-Gram matrix. For bases of
// unequal dimension this is the angle of the smaller against the larger.
double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b);

// True iff dims agree and the largest principal angle is <= tol. The angle
// is reported through angle_out when provided.
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b,
                    double tol_angle = tol::angle, double* angle_out = nullptr);

// Range of a PSD matrix: eigenvectors with eigenvalue > rel_tol * lambda_max.
SubspaceBasis psd_range(const Matrix& a, double rel_tol = tol::support_eig);

// Sum of singular values; for Hermitian input this is sum |lambda_i|.
double trace_norm(const Matrix& a);

}  // namespace qtransport
