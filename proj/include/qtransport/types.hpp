// types.hpp — shared scalar/matrix aliases and default numerical tolerances
#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qtransport {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tol {
// Relative singular-value threshold for rank decisions.
inline constexpr double rank = 1e-10;
// Allowed asymmetry before a matrix stops counting as Hermitian.
inline constexpr double hermiticity = 1e-10;
// Generator residual below which a state counts as invariant.
inline constexpr double invariant = 1e-10;
// Support leakage allowed outside a prescribed subspace.
inline constexpr double support = 1e-9;
// Largest principal angle for subspace equality.
inline constexpr double angle = 1e-7;
// Hilbert-Schmidt overlap with the bright pure state for darkness.
inline constexpr double dark = 1e-12;
// Eigenvalue threshold when extracting the support of an oracle state.
inline constexpr double support_eig = 1e-9;
}  // namespace tol

inline constexpr Complex kImag{0.0, 1.0};

}  // namespace qtransport
