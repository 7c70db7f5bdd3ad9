#include "qtransport/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qtransport/errors.hpp"
#include "qtransport/transport.hpp"

namespace qtransport {

namespace {

// The family removed from H to form V, each tagged with the level it lives
// in (every member is level-homogeneous by construction).
std::vector<std::pair<int, Vector>> removed_vectors(const ModelSpec& spec) {
  const Matrix z = transport_operator(spec);
  const Matrix zd = z.adjoint();
  std::vector<std::pair<int, Vector>> out;

  Vector v = canonical_vector(spec, 0, 0);
  out.emplace_back(0, v);
  for (int n = 1; n <= spec.num_levels; ++n) {
    v = z * v;
    out.emplace_back(n, v);
  }

  v = canonical_vector(spec, spec.num_levels + 1, 0);
  out.emplace_back(spec.num_levels + 1, v);
  for (int n = 1; n <= spec.num_levels; ++n) {
    v = zd * v;
    out.emplace_back(spec.num_levels + 1 - n, v);
  }

  for (int m = 1; 2 * m + 1 <= spec.num_levels; ++m) {
    Vector w = entangled_vector(spec, 2 * m + 1, 0);
    for (int s = 1; s <= 2 * m; ++s) {
      w = zd * w;
      out.emplace_back(2 * m + 1 - s, w);
    }
  }
  return out;
}

Matrix stack_columns(const ModelSpec& spec,
                     const std::vector<std::pair<int, Vector>>& family) {
  Matrix cols(spec.total_dim, static_cast<Index>(family.size()));
  for (size_t i = 0; i < family.size(); ++i) {
    cols.col(static_cast<Index>(i)) = family[i].second;
  }
  return cols;
}

Matrix sink_state(const ModelSpec& spec) {
  Vector v = canonical_vector(spec, spec.num_levels + 1, 0);
  return v * v.adjoint();
}

}  // namespace

SubspaceBasis interaction_free_subspace(const ModelSpec& spec) {
  const int n1 = spec.level_dim(1);
  const int n2 = spec.level_dim(2);
  Matrix cols(spec.total_dim, n1 - n2);
  for (int a = n2; a < n1; ++a) {
    cols.col(a - n2) = entangled_vector(spec, 1, a);
  }
  return {spec.total_dim, std::move(cols)};
}

SubspaceBasis harmonic_subspace_v(const ModelSpec& spec) {
  const auto family = removed_vectors(spec);
  SubspaceBasis removed =
      orthonormalize(spec.total_dim, stack_columns(spec, family));
  return complement(removed);
}

SubspaceBasis v_level(const ModelSpec& spec, int k) {
  if (k < 1 || k > spec.num_levels) {
    throw IndexOutOfRange("v_level: level " + std::to_string(k) +
                          " outside 1.." + std::to_string(spec.num_levels));
  }
  // V splits level-wise, so V_k = E_k ⊖ span{removed vectors in E_k}.
  const int nk = spec.level_dim(k);
  const int off = spec.offset(k);
  std::vector<Vector> in_level;
  for (const auto& [level, vec] : removed_vectors(spec)) {
    if (level == k) in_level.push_back(vec.segment(off, nk));
  }
  Matrix block(nk, static_cast<Index>(in_level.size()));
  for (size_t i = 0; i < in_level.size(); ++i) {
    block.col(static_cast<Index>(i)) = in_level[i];
  }
  SubspaceBasis local = complement(orthonormalize(nk, block));
  Matrix embedded = Matrix::Zero(spec.total_dim, local.dim());
  embedded.middleRows(off, nk) = local.vectors;
  return {spec.total_dim, std::move(embedded)};
}

SubspaceBasis v1_subspace(const ModelSpec& spec) { return v_level(spec, 1); }

SubspaceBasis v1_minus_w(const ModelSpec& spec) {
  return relative_complement(v1_subspace(spec),
                             interaction_free_subspace(spec));
}

SubspaceBasis fast_recurrent_subspace(const ModelSpec& spec) {
  SubspaceBasis v = harmonic_subspace_v(spec);
  Matrix cols(spec.total_dim, v.dim() + 1);
  cols.leftCols(v.dim()) = v.vectors;
  cols.col(v.dim()) = canonical_vector(spec, spec.num_levels + 1, 0);
  return {spec.total_dim, std::move(cols)};
}

std::vector<double> transport_level_identities(const ModelSpec& spec) {
  const Matrix z = transport_operator(spec);
  std::vector<double> angles;

  std::vector<SubspaceBasis> levels;
  levels.reserve(static_cast<size_t>(spec.num_levels));
  for (int k = 1; k <= spec.num_levels; ++k) {
    levels.push_back(v_level(spec, k));
  }

  for (int k = 1; k <= spec.num_levels - 1; ++k) {
    Matrix mapped = levels[static_cast<size_t>(k - 1)].vectors;
    for (int j = 1; j <= spec.num_levels - k; ++j) {
      mapped = z * mapped;
      SubspaceBasis image = orthonormalize(spec.total_dim, mapped);
      double angle = 0.0;
      subspace_equal(image, levels[static_cast<size_t>(k + j - 1)],
                     tol::angle, &angle);
      angles.push_back(angle);
    }
  }

  // V = ⊕_{j=0}^{N-1} Z^j V_1.
  std::vector<SubspaceBasis> chain;
  Matrix mapped = levels[0].vectors;
  chain.push_back(levels[0]);
  for (int j = 1; j < spec.num_levels; ++j) {
    mapped = z * mapped;
    chain.push_back(orthonormalize(spec.total_dim, mapped));
  }
  double angle = 0.0;
  subspace_equal(join(chain), harmonic_subspace_v(spec), tol::angle, &angle);
  angles.push_back(angle);
  return angles;
}

Matrix transport_chain_sum(const ModelSpec& spec, const Matrix& tau) {
  if (tau.rows() != spec.total_dim || tau.cols() != spec.total_dim) {
    throw ShapeMismatch("transport_chain_sum: wrong state dimension");
  }
  const Matrix z = transport_operator(spec);
  Matrix out = Matrix::Zero(spec.total_dim, spec.total_dim);
  Matrix cur = tau;
  for (int n = 0; n < spec.num_levels; ++n) {
    out += spec.beta_prefix_exp(n) * cur;
    if (n + 1 < spec.num_levels) {
      cur = z * cur * z.adjoint();
    }
  }
  return out;
}

Matrix build_invariant_from_tau(const ModelSpec& spec, const Matrix& tau) {
  if (tau.rows() != spec.total_dim || tau.cols() != spec.total_dim) {
    throw ShapeMismatch("build_invariant_from_tau: wrong state dimension");
  }
  const Matrix p = v1_minus_w(spec).projector();
  const double leak = (tau - p * tau * p).norm();
  if (leak > tol::support) {
    throw SupportViolation(
        "build_invariant_from_tau: tau leaks outside V_1 ⊖ W by " +
        std::to_string(leak));
  }
  Matrix rho = transport_chain_sum(spec, tau);
  const double trace = rho.trace().real();
  if (trace <= 0.0) {
    throw ZeroVector("build_invariant_from_tau: zero chain trace");
  }
  return rho / trace;
}

Matrix extremal_invariant_from_vector(const ModelSpec& spec, const Vector& u) {
  if (u.size() != spec.total_dim) {
    throw ShapeMismatch("extremal_invariant_from_vector: wrong length");
  }
  const double norm = u.norm();
  if (norm < 1e-14) {
    throw ZeroVector("extremal_invariant_from_vector: zero seed vector");
  }
  Vector unit = u / norm;
  const Matrix p = v1_minus_w(spec).projector();
  const double leak = (unit - p * unit).norm();
  if (leak > tol::support) {
    throw SupportViolation(
        "extremal_invariant_from_vector: seed leaks outside V_1 ⊖ W by " +
        std::to_string(leak));
  }
  return build_invariant_from_tau(spec, unit * unit.adjoint());
}

InvariantDecomposition decompose_invariant(const ModelSpec& spec,
                                           const Matrix& rho) {
  const double residual = apply_generator(spec, rho).norm();
  if (residual > 1e-9) {
    throw NotInvariant("decompose_invariant: generator residual " +
                       std::to_string(residual));
  }

  InvariantDecomposition dec;
  const Vector sink = canonical_vector(spec, spec.num_levels + 1, 0);
  dec.lambda = std::real(Complex(sink.adjoint() * rho * sink));
  if (dec.lambda < 1e-12) dec.lambda = 0.0;

  const Matrix pw = interaction_free_subspace(spec).projector();
  dec.beta = (pw * rho).trace().real();
  if (dec.beta > 1e-12) {
    dec.eta = Matrix((pw * rho * pw) / dec.beta);
  } else {
    dec.beta = 0.0;
  }

  dec.alpha = 1.0 - dec.beta - dec.lambda;
  if (dec.alpha > 1e-12) {
    const double overlap = (rho * abs_z(spec, 1)).trace().real();
    dec.c = overlap / dec.alpha;
    const Matrix pv = v1_minus_w(spec).projector();
    dec.tau = Matrix((pv * rho * pv) / (dec.alpha * dec.c));
  } else {
    dec.alpha = 0.0;
  }

  Matrix rebuilt = dec.lambda * sink_state(spec);
  if (dec.eta) rebuilt += dec.beta * (*dec.eta);
  if (dec.tau) {
    rebuilt += dec.alpha * dec.c * transport_chain_sum(spec, *dec.tau);
  }
  dec.reconstruction_residual = (rho - rebuilt).norm();
  if (dec.reconstruction_residual > 1e-9) {
    throw ReconstructionFailure(
        "decompose_invariant: reassembly residual " +
        std::to_string(dec.reconstruction_residual));
  }
  return dec;
}

bool is_invariant(const ModelSpec& spec, const Matrix& rho, double tolerance) {
  return apply_generator(spec, rho).norm() <= tolerance;
}

std::vector<double> detailed_balance_check(const ModelSpec& spec,
                                           const Matrix& rho) {
  std::vector<double> residuals;
  for (int k = 1; k <= spec.num_levels - 1; ++k) {
    const Matrix zk = transition_operator(spec, k);
    const double ebk = std::exp(spec.beta[static_cast<size_t>(k)]);
    residuals.push_back((rho * zk - ebk * (zk * rho)).norm());
  }
  return residuals;
}

bool is_dark(const ModelSpec& spec, const Matrix& rho) {
  const Vector phi = entangled_vector(spec, 1, 0);
  return std::real(Complex(phi.adjoint() * rho * phi)) <= tol::dark;
}

SteadyStateResult numeric_steady_state(const ModelSpec& spec) {
  const Superoperator liou = liouvillian_matrix(spec);
  const Index d = spec.total_dim;
  const Index d2 = d * d;

  SubspaceBasis right = null_space(liou.matrix);
  SubspaceBasis left = null_space(liou.matrix.adjoint());
  const int r = right.dim();
  if (r == 0 || r != left.dim()) {
    throw ProjectorFailure(
        "numeric_steady_state: kernel dims (right " + std::to_string(r) +
        ", left " + std::to_string(left.dim()) + ") disagree");
  }

  // Separation of the zero group from the rest of the spectrum.
  Eigen::ComplexSchur<Matrix> schur(liou.matrix, /*computeU=*/false);
  if (schur.info() != Eigen::Success) {
    throw NoConvergence("numeric_steady_state: Schur decomposition failed");
  }
  std::vector<double> magnitudes(static_cast<size_t>(d2));
  for (Index i = 0; i < d2; ++i) {
    magnitudes[static_cast<size_t>(i)] = std::abs(schur.matrixT()(i, i));
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  const double gap = magnitudes[static_cast<size_t>(r)];
  if (gap < 1e-8) {
    throw ProjectorFailure(
        "numeric_steady_state: zero eigenvalue not separated; gap " +
        std::to_string(gap));
  }

  Matrix overlap = left.vectors.adjoint() * right.vectors;
  Eigen::FullPivLU<Matrix> lu(overlap);
  if (!lu.isInvertible()) {
    throw ProjectorFailure(
        "numeric_steady_state: zero eigenvalue appears defective");
  }
  // Spectral projector onto ker L along ran L.
  Matrix projector = right.vectors * lu.solve(left.vectors.adjoint());

  Matrix mixed = Matrix::Identity(d, d) / static_cast<double>(d);
  Matrix state = devec(projector * vec(mixed), d);
  state = 0.5 * (state + state.adjoint());

  auto eig = hermitian_eig(state, 1e-8);
  RealVector clipped = eig.values.cwiseMax(0.0);
  state = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  state /= state.trace().real();

  eig = hermitian_eig(state);
  std::vector<Index> keep;
  for (Index i = 0; i < d; ++i) {
    if (eig.values(i) > tol::support_eig) keep.push_back(i);
  }
  Matrix support_cols(d, static_cast<Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    support_cols.col(static_cast<Index>(j)) = eig.vectors.col(keep[j]);
  }

  SteadyStateResult result;
  result.state = std::move(state);
  result.kernel = std::move(right);
  result.support = SubspaceBasis{d, std::move(support_cols)};
  result.spectral_gap = gap;
  return result;
}

SubspaceBasis commutant_c0(const ModelSpec& spec) {
  const Index d = spec.total_dim;
  const Index d2 = d * d;
  const Matrix ident = Matrix::Identity(d, d);
  const int blocks = 2 * (spec.num_levels + 1);
  Matrix stacked(static_cast<Index>(blocks) * d2, d2);
  Index row = 0;
  for (int k = 0; k <= spec.num_levels; ++k) {
    const Matrix z = transition_operator(spec, k);
    // [X, A] = XA - AX  ->  (A^T ⊗ I) - (I ⊗ A).
    stacked.middleRows(row, d2) =
        kron(z.transpose(), ident) - kron(ident, z);
    row += d2;
    stacked.middleRows(row, d2) =
        kron(z.conjugate(), ident) - kron(ident, Matrix(z.adjoint()));
    row += d2;
  }
  SubspaceBasis basis = null_space(stacked);

  // Fixed-point containment: each commutant element is killed by the dual.
  for (int i = 0; i < basis.dim(); ++i) {
    const Matrix x = devec(basis.vectors.col(i), d);
    const double res = apply_dual(spec, x).norm();
    if (res > 1e-9) {
      throw Error("commutant_c0: basis element " + std::to_string(i) +
                  " has dual residual " + std::to_string(res));
    }
  }
  return basis;
}

}  // namespace qtransport
