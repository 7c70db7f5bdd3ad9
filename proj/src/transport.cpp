#include "qtransport/transport.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

Matrix transition_operator(const ModelSpec& spec, int k) {
  if (k < 0 || k > spec.num_levels) {
    throw IndexOutOfRange("transition operator index " + std::to_string(k) +
                          " outside 0.." + std::to_string(spec.num_levels));
  }
  const int nk = spec.level_dim(k);
  const int nk1 = spec.level_dim(k + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(nk));
  Matrix z = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int a = 0; a < nk1; ++a) {
    for (int b = 0; b < nk; ++b) {
      const double arg = 2.0 * std::numbers::pi * a * b / nk;
      z(spec.offset(k + 1) + a, spec.offset(k) + b) =
          scale * Complex{std::cos(arg), std::sin(arg)};
    }
  }
  return z;
}

Matrix transport_operator(const ModelSpec& spec) {
  Matrix z = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int k = 0; k <= spec.num_levels; ++k) {
    z += transition_operator(spec, k);
  }
  return z;
}

Matrix abs_z(const ModelSpec& spec, int k) {
  if (k < 1 || k > spec.num_levels) {
    throw IndexOutOfRange("|Z_k| defined for k = 1.." +
                          std::to_string(spec.num_levels) + ", got " +
                          std::to_string(k));
  }
  Matrix p = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int a = 0; a < spec.level_dim(k + 1); ++a) {
    Vector phi = entangled_vector(spec, k, a);
    p += phi * phi.adjoint();
  }
  return p;
}

Matrix abs_z_perp(const ModelSpec& spec, int k) {
  return level_projector(spec, k) - abs_z(spec, k);
}

Matrix bright_projector(const ModelSpec& spec) {
  Vector phi = entangled_vector(spec, 1, 0);
  return phi * phi.adjoint();
}

Vector transport_power_on_zero(const ModelSpec& spec, int k, int p) {
  if (k < 1 || k > spec.num_levels - 1) {
    throw IndexOutOfRange("transport power start level " + std::to_string(k));
  }
  if (p < 1 || k + p > spec.num_levels + 1) {
    throw IndexOutOfRange("transport power " + std::to_string(p) +
                          " leaves the chain");
  }
  const Matrix z = transport_operator(spec);
  Vector result = canonical_vector(spec, k, 0);
  for (int i = 0; i < p; ++i) {
    result = z * result;
  }

  // Closed form: odd powers land on the entangled vector, even powers on
  // the canonical one, with one dimension-ratio factor per odd step.
  double coeff = 1.0;
  const int odd_steps = (p + 1) / 2;
  for (int j = 0; j < odd_steps; ++j) {
    coeff *= std::sqrt(static_cast<double>(spec.level_dim(k + 2 * j + 1)) /
                       static_cast<double>(spec.level_dim(k + 2 * j)));
  }
  Vector expected = (p % 2 == 1) ? entangled_vector(spec, k + p, 0)
                                 : canonical_vector(spec, k + p, 0);
  expected *= coeff;

  if ((result - expected).norm() > 1e-12) {
    throw ClosedFormMismatch(
        "transport power Z^" + std::to_string(p) + "|0_" + std::to_string(k) +
        "> deviates from the closed form by " +
        std::to_string((result - expected).norm()));
  }
  return result;
}

}  // namespace qtransport
