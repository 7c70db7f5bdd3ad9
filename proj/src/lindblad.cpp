#include "qtransport/lindblad.hpp"

#include <cmath>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/transport.hpp"

namespace qtransport {

namespace {

void require_shape(const ModelSpec& spec, const Matrix& x, const char* who) {
  if (x.rows() != spec.total_dim || x.cols() != spec.total_dim) {
    throw ShapeMismatch(std::string(who) + ": expected " +
                        std::to_string(spec.total_dim) + "x" +
                        std::to_string(spec.total_dim) + " matrix");
  }
}

// Right multiplier M of the rewritten generator: L(rho) contains rho * M
// and M† * rho. M = n_1 eta_{-,0} P_0 + n_1 conj(eta_{+,0}) P_phi
//                + sum_j (eta_{-,j} |Z_j| + conj(eta_{+,j}) P_{j+1}).
Matrix right_multiplier(const ModelSpec& spec) {
  const double n1 = spec.level_dim(1);
  Matrix m = n1 * spec.eta_minus[0] * level_projector(spec, 0) +
             n1 * std::conj(spec.eta_plus[0]) * bright_projector(spec);
  for (int j = 1; j <= spec.num_levels; ++j) {
    m += spec.eta_minus[static_cast<size_t>(j)] * abs_z(spec, j) +
         std::conj(spec.eta_plus[static_cast<size_t>(j)]) *
             level_projector(spec, j + 1);
  }
  return m;
}

}  // namespace

Vector vec(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix devec(const Vector& v, Index d) {
  if (v.size() != d * d) {
    throw ShapeMismatch("devec: length does not match dimension");
  }
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<std::pair<std::string, Matrix>> kraus_operators(
    const ModelSpec& spec) {
  std::vector<std::pair<std::string, Matrix>> ops;
  ops.reserve(2 * (static_cast<size_t>(spec.num_levels) + 1));
  for (int k = 0; k <= spec.num_levels; ++k) {
    const Matrix z = transition_operator(spec, k);
    ops.emplace_back("-," + std::to_string(k),
                     std::sqrt(spec.gamma_minus[static_cast<size_t>(k)]) * z);
    ops.emplace_back("+," + std::to_string(k),
                     std::sqrt(spec.gamma_plus[static_cast<size_t>(k)]) *
                         Matrix(z.adjoint()));
  }
  return ops;
}

Matrix effective_hamiltonian(const ModelSpec& spec) {
  Matrix h = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int k = 0; k <= spec.num_levels; ++k) {
    const Matrix z = transition_operator(spec, k);
    h += spec.shift_minus[static_cast<size_t>(k)] * (z.adjoint() * z) -
         spec.shift_plus[static_cast<size_t>(k)] * (z * z.adjoint());
  }
  return h;
}

Matrix apply_generator(const ModelSpec& spec, const Matrix& rho) {
  require_shape(spec, rho, "apply_generator");
  const Matrix m = right_multiplier(spec);
  Matrix out = rho * m + m.adjoint() * rho;
  for (int k = 0; k <= spec.num_levels; ++k) {
    const Matrix z = transition_operator(spec, k);
    out += spec.gamma_minus[static_cast<size_t>(k)] * (z * rho * z.adjoint());
    if (k < spec.num_levels) {
      out += spec.gamma_plus[static_cast<size_t>(k)] * (z.adjoint() * rho * z);
    }
  }
  return out;
}

Matrix apply_generator_gksl(const ModelSpec& spec, const Matrix& rho) {
  require_shape(spec, rho, "apply_generator_gksl");
  Matrix out = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int k = 0; k <= spec.num_levels; ++k) {
    const size_t ks = static_cast<size_t>(k);
    const Matrix z = transition_operator(spec, k);
    const Matrix zdz = z.adjoint() * z;
    const Matrix zzd = z * z.adjoint();
    const Matrix delta =
        spec.shift_minus[ks] * zdz - spec.shift_plus[ks] * zzd;
    out += -kImag * (delta * rho - rho * delta);
    out += spec.gamma_minus[ks] *
           (z * rho * z.adjoint() - 0.5 * (zdz * rho + rho * zdz));
    out += spec.gamma_plus[ks] *
           (z.adjoint() * rho * z - 0.5 * (zzd * rho + rho * zzd));
  }
  return out;
}

Matrix apply_dual(const ModelSpec& spec, const Matrix& x) {
  require_shape(spec, x, "apply_dual");
  Matrix out = Matrix::Zero(spec.total_dim, spec.total_dim);
  const Matrix h = effective_hamiltonian(spec);
  out += kImag * (h * x - x * h);
  for (int k = 0; k <= spec.num_levels; ++k) {
    const size_t ks = static_cast<size_t>(k);
    const Matrix z = transition_operator(spec, k);
    const Matrix zdz = z.adjoint() * z;
    const Matrix zzd = z * z.adjoint();
    out += spec.gamma_minus[ks] *
           (z.adjoint() * x * z - 0.5 * (zdz * x + x * zdz));
    out += spec.gamma_plus[ks] *
           (z * x * z.adjoint() - 0.5 * (zzd * x + x * zzd));
  }
  return out;
}

Superoperator liouvillian_matrix(const ModelSpec& spec) {
  const Index d = spec.total_dim;
  const Matrix ident = Matrix::Identity(d, d);
  const Matrix m = right_multiplier(spec);
  // X -> X M        is  (M^T ⊗ I)
  // X -> M† X       is  (I ⊗ M†)
  Matrix big = kron(m.transpose(), ident) + kron(ident, m.adjoint());
  for (int k = 0; k <= spec.num_levels; ++k) {
    const size_t ks = static_cast<size_t>(k);
    const Matrix z = transition_operator(spec, k);
    big += spec.gamma_minus[ks] * kron(z.conjugate(), z);
    if (k < spec.num_levels) {
      big += spec.gamma_plus[ks] * kron(z.transpose(), z.adjoint());
    }
  }
  return {static_cast<int>(d), std::move(big)};
}

Matrix phi_map(const ModelSpec& spec, const Matrix& rho) {
  require_shape(spec, rho, "phi_map");
  const double n1 = spec.level_dim(1);
  const Matrix p = bright_projector(spec);
  return n1 * (spec.gamma_plus[0] * (p * rho * p) +
               spec.eta_plus[0] * (p * rho) +
               std::conj(spec.eta_plus[0]) * (rho * p));
}

Matrix iterated_commutator(const ModelSpec& spec, const Matrix& x, int n) {
  require_shape(spec, x, "iterated_commutator");
  if (n < 0) {
    throw IndexOutOfRange("iterated_commutator: negative order");
  }
  Matrix out = x;
  if (n > 0) {
    const Matrix h = effective_hamiltonian(spec);
    for (int i = 0; i < n; ++i) {
      out = h * out - out * h;
    }
  }
  return out;
}

Matrix choi_matrix(const Superoperator& op) {
  const Index d = op.dim;
  Matrix choi(d * d, d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      const Matrix image = devec(op.matrix * vec(unit), d);
      choi.block(i * d, j * d, d, d) = image;
      unit(i, j) = 0.0;
    }
  }
  return choi;
}

}  // namespace qtransport
