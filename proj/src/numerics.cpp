#include "qtransport/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

Eigen::JacobiSVD<Matrix> svd_of(const Matrix& a, unsigned options) {
  return Eigen::JacobiSVD<Matrix>(a, options);
}

}  // namespace

double SubspaceBasis::gram_defect() const {
  if (dim() == 0) return 0.0;
  Matrix gram = vectors.adjoint() * vectors;
  return (gram - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

EigResult hermitian_eig(const Matrix& a, double herm_tol) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("hermitian_eig: matrix is not square");
  }
  const double scale = std::max(1.0, a.norm());
  const double asym = (a - a.adjoint()).norm();
  if (asym > herm_tol * scale) {
    throw NotHermitian("hermitian_eig: asymmetry " + std::to_string(asym) +
                       " exceeds tolerance");
  }
  Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Scaling-and-squaring with the (13,13) Pade approximant (Higham 2005).
Matrix matrix_exp(const Matrix& a, double t) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("matrix_exp: matrix is not square");
  }
  const Index n = a.rows();
  Matrix x = t * a;
  if (!x.allFinite()) {
    throw OverflowError("matrix_exp: non-finite input");
  }

  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  constexpr double theta13 = 5.371920351148152;
  int squarings = 0;
  if (norm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    x /= std::pow(2.0, squarings);
  }

  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};

  const Matrix ident = Matrix::Identity(n, n);
  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x4 * x2;
  Matrix u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 +
                  b[5] * x4 + b[3] * x2 + b[1] * ident);
  Matrix v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 +
             b[4] * x4 + b[2] * x2 + b[0] * ident;

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  if (!result.allFinite()) {
    throw OverflowError("matrix_exp: overflow in result");
  }
  return result;
}

SubspaceBasis null_space(const Matrix& a, double rel_tol) {
  auto svd = svd_of(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const Index cols = a.cols();
  const double cutoff = sigma.size() > 0 ? rel_tol * sigma(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  Matrix kernel = svd.matrixV().rightCols(cols - rank);
  return {cols, std::move(kernel)};
}

int numeric_rank(const Matrix& a, double rel_tol) {
  auto svd = svd_of(a, 0);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double cutoff = rel_tol * sigma(0);
  int rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  return rank;
}

SubspaceBasis orthonormalize(Index ambient, const Matrix& columns,
                             double rel_tol) {
  if (columns.cols() == 0) return SubspaceBasis::empty(ambient);
  if (columns.rows() != ambient) {
    throw ShapeMismatch("orthonormalize: ambient dimension mismatch");
  }
  auto svd = svd_of(columns, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = rel_tol * (sigma.size() > 0 ? sigma(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  return {ambient, svd.matrixU().leftCols(rank)};
}

SubspaceBasis complement(const SubspaceBasis& s, double rel_tol) {
  if (s.dim() == 0) {
    return {s.ambient_dim, Matrix::Identity(s.ambient_dim, s.ambient_dim)};
  }
  // (ran M)^perp = ker M†.
  return null_space(s.vectors.adjoint(), rel_tol);
}

SubspaceBasis relative_complement(const SubspaceBasis& a,
                                  const SubspaceBasis& b, double rel_tol) {
  if (a.ambient_dim != b.ambient_dim) {
    throw AmbientMismatch("relative_complement: ambient dims differ");
  }
  if (a.dim() == 0) return SubspaceBasis::empty(a.ambient_dim);
  Matrix residual = a.vectors;
  if (b.dim() > 0) {
    residual -= b.vectors * (b.vectors.adjoint() * a.vectors);
  }
  // Columns that lay inside B are dropped by the rank cut.
  return orthonormalize(a.ambient_dim, residual, std::max(rel_tol, 1e-9));
}

SubspaceBasis join(const std::vector<SubspaceBasis>& parts, double rel_tol) {
  if (parts.empty()) {
    throw AmbientMismatch("join: no subspaces given");
  }
  const Index ambient = parts.front().ambient_dim;
  Index total = 0;
  for (const auto& p : parts) {
    if (p.ambient_dim != ambient) {
      throw AmbientMismatch("join: ambient dims differ");
    }
    total += p.dim();
  }
  Matrix stacked(ambient, total);
  Index col = 0;
  for (const auto& p : parts) {
    stacked.middleCols(col, p.dim()) = p.vectors;
    col += p.dim();
  }
  return orthonormalize(ambient, stacked, rel_tol);
}

double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw AmbientMismatch("max_principal_angle: ambient dims differ");
  }
  if (a.dim() == 0 && b.dim() == 0) return 0.0;
  if (a.dim() == 0 || b.dim() == 0) return std::numbers::pi / 2.0;
  // Sine route: sin(theta_max) is the largest singular value of the part of
  // A left after projecting out B. The cosine route loses resolution below
  // sqrt(machine epsilon) for nearly equal subspaces.
  Matrix residual = a.vectors - b.vectors * (b.vectors.adjoint() * a.vectors);
  auto svd = svd_of(residual, 0);
  const double sin_max = std::clamp(svd.singularValues()(0), 0.0, 1.0);
  return std::asin(sin_max);
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b,
                    double tol_angle, double* angle_out) {
  const double angle = max_principal_angle(a, b);
  if (angle_out != nullptr) *angle_out = angle;
  return a.dim() == b.dim() && angle <= tol_angle;
}

SubspaceBasis psd_range(const Matrix& a, double rel_tol) {
  auto eig = hermitian_eig(a, 1e-8);
  const Index d = a.rows();
  const double top = eig.values.size() > 0 ? eig.values(d - 1) : 0.0;
  const double cutoff = rel_tol * std::max(top, 0.0);
  std::vector<Index> keep;
  for (Index i = 0; i < d; ++i) {
    if (eig.values(i) > cutoff && eig.values(i) > 0.0) keep.push_back(i);
  }
  Matrix cols(d, static_cast<Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    cols.col(static_cast<Index>(j)) = eig.vectors.col(keep[j]);
  }
  return {d, std::move(cols)};
}

double trace_norm(const Matrix& a) {
  auto svd = svd_of(a, 0);
  return svd.singularValues().sum();
}

}  // namespace qtransport
