#include "qtransport/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtransport/errors.hpp"

namespace qtransport {

double Rng::uniform() {
  // 53 high bits -> [0, 1); independent of library distribution details.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int Rng::uniform_int(int lo, int hi) {
  const int span = hi - lo + 1;
  return lo + static_cast<int>(static_cast<double>(span) * uniform());
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = complex_gaussian();
    }
  }
  return m;
}

Matrix Rng::hermitian(Index d) {
  Matrix g = gaussian_matrix(d, d);
  return 0.5 * (g + g.adjoint());
}

Matrix Rng::density(Index d) {
  Matrix g = gaussian_matrix(d, d);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix Rng::density_on(const SubspaceBasis& s) {
  if (s.dim() == 0) {
    throw ZeroVector("density_on: empty subspace");
  }
  Matrix small = density(s.dim());
  return s.vectors * small * s.vectors.adjoint();
}

Vector Rng::unit_vector_in(const SubspaceBasis& s) {
  if (s.dim() == 0) {
    throw ZeroVector("unit_vector_in: empty subspace");
  }
  Vector coeffs(s.dim());
  for (int i = 0; i < s.dim(); ++i) coeffs(i) = complex_gaussian();
  Vector v = s.vectors * coeffs;
  return v / v.norm();
}

ModelSpec random_spec(Rng& rng, int max_levels, int max_n1, bool force_dh) {
  const int n = rng.uniform_int(1, max_levels);
  ModelSpec raw;
  raw.num_levels = n;
  raw.dims.assign(static_cast<size_t>(n) + 2, 1);
  int cap = rng.uniform_int(1, max_n1);
  for (int k = 1; k <= n; ++k) {
    const int dim = rng.uniform_int(1, cap);
    raw.dims[static_cast<size_t>(k)] = dim;
    cap = dim;
  }
  if (force_dh && n >= 3) {
    for (int k = 3; k <= n; ++k) {
      raw.dims[static_cast<size_t>(k)] = raw.dims[2];
    }
  }

  // Strictly decreasing energies with generic (distinct) gaps.
  raw.energies.assign(static_cast<size_t>(n) + 2, 0.0);
  double e = 0.0;
  for (int k = n; k >= 0; --k) {
    e += rng.uniform(0.5, 2.5);
    raw.energies[static_cast<size_t>(k)] = e;
  }

  const size_t rate_count = static_cast<size_t>(n) + 1;
  raw.gamma_minus.resize(rate_count);
  raw.gamma_plus.resize(rate_count);
  raw.shift_minus.resize(rate_count);
  raw.shift_plus.resize(rate_count);
  for (size_t k = 0; k < rate_count; ++k) {
    raw.gamma_minus[k] = rng.uniform(0.5, 2.0);
    raw.gamma_plus[k] = rng.uniform(0.2, 1.5);
    raw.shift_minus[k] = rng.uniform(-0.3, 0.3);
    raw.shift_plus[k] = rng.uniform(-0.3, 0.3);
  }
  raw.gamma_plus.back() = 0.0;
  return validate_spec(std::move(raw));
}

}  // namespace qtransport
