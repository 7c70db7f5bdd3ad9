#include "qtransport/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace detail {

void require_level(const ModelSpec& spec, int k) {
  if (k < 0 || k > spec.num_levels + 1) {
    throw IndexOutOfRange("level index " + std::to_string(k) +
                          " outside 0.." + std::to_string(spec.num_levels + 1));
  }
}

void require_level_index(const ModelSpec& spec, int k, int a) {
  require_level(spec, k);
  if (a < 0 || a >= spec.level_dim(k)) {
    throw IndexOutOfRange("intra-level index " + std::to_string(a) +
                          " outside 0.." + std::to_string(spec.level_dim(k) - 1) +
                          " in level " + std::to_string(k));
  }
}

}  // namespace detail

bool ModelSpec::dimension_hypothesis() const {
  for (int k = 3; k <= num_levels; ++k) {
    if (dims[static_cast<size_t>(k)] != dims[2]) return false;
  }
  return true;
}

double ModelSpec::beta_prefix_exp(int n) const {
  double sum = 0.0;
  for (int j = 0; j <= n && j < static_cast<int>(beta.size()); ++j) {
    sum += beta[static_cast<size_t>(j)];
  }
  return std::exp(sum);
}

ModelSpec validate_spec(ModelSpec raw) {
  const int n_levels = raw.num_levels;
  if (n_levels < 1) {
    throw ValidationError("BoundaryDim", "N must be a positive integer");
  }
  const size_t block_count = static_cast<size_t>(n_levels) + 2;
  const size_t rate_count = static_cast<size_t>(n_levels) + 1;
  if (raw.dims.size() != block_count || raw.energies.size() != block_count) {
    throw ValidationError("BoundaryDim",
                          "dims and energies must have N+2 entries");
  }
  if (raw.gamma_minus.size() != rate_count ||
      raw.gamma_plus.size() != rate_count ||
      raw.shift_minus.size() != rate_count ||
      raw.shift_plus.size() != rate_count) {
    throw ValidationError("RateSign", "rate lists must have N+1 entries");
  }

  if (raw.dims.front() != 1 || raw.dims.back() != 1) {
    throw ValidationError("BoundaryDim", "n_0 and n_{N+1} must equal 1");
  }
  for (int k = 1; k <= n_levels; ++k) {
    const int nk = raw.dims[static_cast<size_t>(k)];
    const int nk1 = raw.dims[static_cast<size_t>(k) + 1];
    if (nk < 1) {
      throw ValidationError("BoundaryDim",
                            "n_" + std::to_string(k) + " must be positive");
    }
    if (nk < nk1) {
      throw ValidationError("DimensionOrder",
                            "n_" + std::to_string(k) + " < n_" +
                                std::to_string(k + 1));
    }
  }

  raw.bohr.assign(rate_count, 0.0);
  for (size_t k = 0; k < rate_count; ++k) {
    const double gap = raw.energies[k] - raw.energies[k + 1];
    if (gap <= 0.0) {
      throw ValidationError("EnergyOrder",
                            "energies must be strictly decreasing");
    }
    raw.bohr[k] = gap;
  }
  for (size_t j = 0; j < rate_count; ++j) {
    for (size_t k = j + 1; k < rate_count; ++k) {
      if (raw.bohr[j] == raw.bohr[k]) {
        throw ValidationError("BohrCollision",
                              "omega_" + std::to_string(j) + " equals omega_" +
                                  std::to_string(k));
      }
    }
  }

  for (size_t k = 0; k < rate_count; ++k) {
    if (raw.gamma_minus[k] <= 0.0) {
      throw ValidationError("RateSign", "Gamma_{-,omega_" + std::to_string(k) +
                                            "} must be positive");
    }
  }
  for (size_t k = 0; k + 1 < rate_count; ++k) {
    if (raw.gamma_plus[k] <= 0.0) {
      throw ValidationError("RateSign", "Gamma_{+,omega_" + std::to_string(k) +
                                            "} must be positive");
    }
  }
  if (raw.gamma_plus.back() != 0.0) {
    throw ValidationError("RateSign", "Gamma_{+,omega_N} must equal 0");
  }

  raw.beta.assign(static_cast<size_t>(n_levels), 0.0);
  for (int k = 1; k < n_levels; ++k) {
    raw.beta[static_cast<size_t>(k)] =
        std::log(raw.gamma_minus[static_cast<size_t>(k)] /
                 raw.gamma_plus[static_cast<size_t>(k)]);
  }

  raw.eta_minus.assign(rate_count, Complex{});
  raw.eta_plus.assign(rate_count, Complex{});
  for (size_t k = 0; k < rate_count; ++k) {
    raw.eta_minus[k] = Complex{-0.5 * raw.gamma_minus[k], raw.shift_minus[k]};
    raw.eta_plus[k] = Complex{-0.5 * raw.gamma_plus[k], raw.shift_plus[k]};
  }
  // Gamma_{+,omega_N} = 0 leaves eta_{+,omega_N} purely imaginary.

  raw.offsets.assign(block_count + 1, 0);
  int acc = 0;
  for (size_t k = 0; k < block_count; ++k) {
    raw.offsets[k] = acc;
    acc += raw.dims[k];
  }
  raw.offsets[block_count] = acc;
  raw.total_dim = acc;
  raw.validated = true;
  return raw;
}

Vector canonical_vector(const ModelSpec& spec, int k, int a) {
  detail::require_level_index(spec, k, a);
  Vector v = Vector::Zero(spec.total_dim);
  v(spec.offset(k) + a) = 1.0;
  return v;
}

Vector entangled_vector(const ModelSpec& spec, int k, int a) {
  detail::require_level_index(spec, k, a);
  const int n = spec.level_dim(k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Vector v = Vector::Zero(spec.total_dim);
  for (int b = 0; b < n; ++b) {
    const double arg = -2.0 * std::numbers::pi * a * b / n;
    v(spec.offset(k) + b) = scale * Complex{std::cos(arg), std::sin(arg)};
  }
  return v;
}

Matrix level_projector(const ModelSpec& spec, int k) {
  detail::require_level(spec, k);
  Matrix p = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int a = 0; a < spec.level_dim(k); ++a) {
    p(spec.offset(k) + a, spec.offset(k) + a) = 1.0;
  }
  return p;
}

}  // namespace qtransport
