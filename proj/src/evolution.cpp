#include "qtransport/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/spectrum.hpp"
#include "qtransport/transport.hpp"

namespace qtransport {

namespace {

Matrix hermitize(const Matrix& x) { return 0.5 * (x + x.adjoint()); }

void require_state_shape(const ModelSpec& spec, const Matrix& rho,
                         const char* who) {
  if (rho.rows() != spec.total_dim || rho.cols() != spec.total_dim) {
    throw ShapeMismatch(std::string(who) + ": wrong state dimension");
  }
}

double min_rate(const ModelSpec& spec) {
  double m = std::numeric_limits<double>::infinity();
  for (double g : spec.gamma_minus) m = std::min(m, g);
  for (double g : spec.gamma_plus) {
    if (g > 0.0) m = std::min(m, g);
  }
  return m;
}

// eta = sum_k Z†^k P_{k+1} rho P_{k+1} Z^k, the level-wise pullback to U.
Matrix pullback_eta(const ModelSpec& spec, const Matrix& rho) {
  const Matrix z = transport_operator(spec);
  Matrix eta = Matrix::Zero(spec.total_dim, spec.total_dim);
  Matrix zk = Matrix::Identity(spec.total_dim, spec.total_dim);
  for (int k = 0; k < spec.num_levels; ++k) {
    const Matrix pk1 = level_projector(spec, k + 1);
    eta += zk.adjoint() * (pk1 * rho * pk1) * zk;
    zk = z * zk;
  }
  return eta;
}

// ⊕_{n=0}^{N-1} Z^n S.
SubspaceBasis transport_chain_of(const ModelSpec& spec,
                                 const SubspaceBasis& s) {
  const Matrix z = transport_operator(spec);
  std::vector<SubspaceBasis> parts;
  Matrix mapped = s.vectors;
  for (int n = 0; n < spec.num_levels; ++n) {
    if (n > 0) mapped = z * mapped;
    parts.push_back(orthonormalize(spec.total_dim, mapped));
  }
  return join(parts);
}

// join_k ⊕_n Z^n ran(Z†^k P_{k+1} rho P_{k+1} Z^k).
SubspaceBasis chained_block_ranges(const ModelSpec& spec, const Matrix& rho) {
  const Matrix z = transport_operator(spec);
  std::vector<SubspaceBasis> parts;
  Matrix zk = Matrix::Identity(spec.total_dim, spec.total_dim);
  for (int k = 0; k < spec.num_levels; ++k) {
    const Matrix pk1 = level_projector(spec, k + 1);
    const Matrix block = zk.adjoint() * (pk1 * rho * pk1) * zk;
    if (block.norm() > 1e-14) {
      parts.push_back(transport_chain_of(spec, psd_range(block)));
    }
    zk = z * zk;
  }
  return parts.empty() ? SubspaceBasis::empty(spec.total_dim) : join(parts);
}

}  // namespace

Propagator::Propagator(const ModelSpec& spec)
    : liouvillian_(liouvillian_matrix(spec)) {}

Matrix Propagator::at(const Matrix& rho0, double t) const {
  const Index d = liouvillian_.dim;
  if (rho0.rows() != d || rho0.cols() != d) {
    throw ShapeMismatch("Propagator: wrong state dimension");
  }
  const Matrix expm = matrix_exp(liouvillian_.matrix, t);
  return hermitize(devec(expm * vec(rho0), d));
}

Matrix propagate(const ModelSpec& spec, const Matrix& rho0, double t) {
  require_state_shape(spec, rho0, "propagate");
  if (t < 0.0) {
    throw IndexOutOfRange("propagate: negative time");
  }
  return Propagator(spec).at(rho0, t);
}

SubspaceBasis u_z_subspace(const ModelSpec& spec, const SubspaceBasis& u) {
  if (u.ambient_dim != spec.total_dim) {
    throw AmbientMismatch("u_z_subspace: wrong ambient dimension");
  }
  if (u.dim() == 0) {
    throw SupportViolation("u_z_subspace: U must be non-zero");
  }
  const Matrix pv = v1_minus_w(spec).projector();
  const double leak = (u.vectors - pv * u.vectors).norm();
  if (leak > tol::support) {
    throw SupportViolation("u_z_subspace: U leaks outside V_1 ⊖ W by " +
                           std::to_string(leak));
  }
  const Matrix z = transport_operator(spec);
  Matrix cols(spec.total_dim, spec.num_levels * u.dim());
  Matrix mapped = u.vectors;
  for (int n = 0; n < spec.num_levels; ++n) {
    if (n > 0) mapped = z * mapped;
    cols.middleCols(n * u.dim(), u.dim()) = mapped;
  }
  SubspaceBasis result = orthonormalize(spec.total_dim, cols);
  if (result.dim() != spec.num_levels * u.dim()) {
    throw SupportViolation("u_z_subspace: transport chain degenerated");
  }
  return result;
}

bool hereditary_member(const ModelSpec& spec, const Matrix& rho,
                       const SubspaceBasis& u) {
  require_state_shape(spec, rho, "hereditary_member");
  const Matrix p = u_z_subspace(spec, u).projector();
  return (rho - p * rho * p).norm() <= 1e-10;
}

Matrix limit_state(const ModelSpec& spec, const Matrix& rho0,
                   const SubspaceBasis& u) {
  require_state_shape(spec, rho0, "limit_state");
  if (!spec.dimension_hypothesis()) {
    throw DHViolated("limit_state: closed form requires DH");
  }
  if (!hereditary_member(spec, rho0, u)) {
    throw NotInSubalgebra("limit_state: rho0 not in the hereditary subalgebra");
  }
  const Matrix eta = pullback_eta(spec, rho0);
  Matrix limit = c_beta(spec) * transport_chain_sum(spec, eta);

  const double invariance = apply_generator(spec, limit).norm();
  if (invariance > tol::invariant) {
    throw ReconstructionFailure("limit_state: limit not invariant, residual " +
                                std::to_string(invariance));
  }
  // Range condition: ran rho_inf sits inside the chained block ranges.
  const double angle = max_principal_angle(psd_range(limit),
                                           chained_block_ranges(spec, rho0));
  if (angle > tol::angle) {
    throw ReconstructionFailure(
        "limit_state: range condition violated, angle " +
        std::to_string(angle));
  }
  return limit;
}

NumericLimit limit_state_numeric(const ModelSpec& spec, const Matrix& rho0,
                                 double t_max, double tolerance) {
  require_state_shape(spec, rho0, "limit_state_numeric");
  if (t_max <= 0.0) {
    t_max = 1e4 / min_rate(spec);
  }
  const Superoperator liou = liouvillian_matrix(spec);
  const Index d = spec.total_dim;

  double t = 1.0;
  Matrix step = matrix_exp(liou.matrix, t);
  Vector current = step * vec(rho0);
  while (true) {
    // Doubling: rho(2t) via the squared step.
    step = step * step;
    Vector next = step * vec(rho0);
    const double residual =
        trace_norm(hermitize(devec(next, d)) - hermitize(devec(current, d)));
    if (residual <= tolerance) {
      NumericLimit out;
      out.state = hermitize(devec(next, d));
      out.t_converged = 2.0 * t;
      out.residual = residual;
      return out;
    }
    current = next;
    t *= 2.0;
    if (t > t_max) {
      throw NoConvergence("limit_state_numeric: no convergence by t = " +
                          std::to_string(t) + ", residual " +
                          std::to_string(residual));
    }
  }
}

AttractionReport attraction_domain_check(const ModelSpec& spec,
                                         const Matrix& rho0,
                                         const Matrix& target,
                                         const SubspaceBasis& u) {
  require_state_shape(spec, rho0, "attraction_domain_check");
  require_state_shape(spec, target, "attraction_domain_check");
  if (!spec.dimension_hypothesis()) {
    throw DHViolated("attraction_domain_check requires DH");
  }

  // The target determines eta through its level-1 block; it must itself be
  // a canonical chain state over U.
  const Matrix p1 = level_projector(spec, 1);
  const Matrix eta_target = (p1 * target * p1) / c_beta(spec);
  const Matrix pu = u.projector();
  if ((eta_target - pu * eta_target * pu).norm() > tol::support ||
      (target - c_beta(spec) * transport_chain_sum(spec, eta_target)).norm() >
          1e-8) {
    throw NotInSubalgebra(
        "attraction_domain_check: target is not a chain state over U");
  }

  AttractionReport report;
  // The domain lives inside the hereditary subalgebra; anything outside is
  // a negative verdict, not a precondition failure.
  if (!hereditary_member(spec, rho0, u)) {
    report.diagnostic = "outside hereditary subalgebra";
    return report;
  }

  const Matrix eta_rho = pullback_eta(spec, rho0);
  report.eta_residual = (eta_target - eta_rho).norm();

  const SubspaceBasis target_ranges =
      transport_chain_of(spec, psd_range(eta_target));
  const SubspaceBasis rho_ranges = chained_block_ranges(spec, rho0);

  report.range_deficit = target_ranges.dim() - rho_ranges.dim();
  const bool ranges_equal = subspace_equal(target_ranges, rho_ranges,
                                           tol::angle, &report.range_angle);
  const bool eta_ok = report.eta_residual <= 1e-9;
  report.in_domain = eta_ok && ranges_equal;
  if (report.in_domain) {
    report.diagnostic = "in domain";
  } else if (!eta_ok) {
    report.diagnostic = "eta mismatch";
    if (report.range_deficit > 0) report.diagnostic += ", range deficit";
  } else if (report.range_deficit > 0) {
    report.diagnostic = "range deficit";
  } else {
    report.diagnostic = "range mismatch";
  }
  return report;
}

std::vector<double> limit_occupations(const ModelSpec& spec) {
  const double cb = c_beta(spec);
  std::vector<double> occ;
  occ.reserve(static_cast<size_t>(spec.num_levels));
  for (int k = 1; k <= spec.num_levels; ++k) {
    occ.push_back(cb * spec.beta_prefix_exp(k - 1));
  }
  return occ;
}

Matrix restricted_effective_hamiltonian(const ModelSpec& spec) {
  Matrix h = Matrix::Zero(spec.total_dim, spec.total_dim);
  for (int k = 1; k <= spec.num_levels - 1; ++k) {
    const size_t ks = static_cast<size_t>(k);
    h += spec.shift_minus[ks] * level_projector(spec, k) -
         spec.shift_plus[ks] * level_projector(spec, k + 1);
  }
  return h;
}

double energy_transfer(const ModelSpec& spec, const Matrix& rho0,
                       const SubspaceBasis& u) {
  const Matrix limit = limit_state(spec, rho0, u);
  const Matrix h = restricted_effective_hamiltonian(spec);
  return ((limit - rho0) * h).trace().real();
}

std::vector<TrajectoryRow> evolve_trajectory(const ModelSpec& spec,
                                             const Matrix& rho0, double t_max,
                                             int points, const Matrix* limit) {
  require_state_shape(spec, rho0, "evolve_trajectory");
  if (points < 2 || t_max <= 0.0) {
    throw IndexOutOfRange("evolve_trajectory: need t_max > 0 and >= 2 points");
  }
  const Superoperator liou = liouvillian_matrix(spec);
  const Index d = spec.total_dim;
  const double dt = t_max / (points - 1);
  const Matrix step = matrix_exp(liou.matrix, dt);

  std::vector<Matrix> projectors;
  for (int k = 0; k <= spec.num_levels + 1; ++k) {
    projectors.push_back(level_projector(spec, k));
  }

  std::vector<TrajectoryRow> rows;
  rows.reserve(static_cast<size_t>(points));
  Vector current = vec(rho0);
  for (int i = 0; i < points; ++i) {
    const Matrix rho = hermitize(devec(current, d));
    TrajectoryRow row;
    row.t = i * dt;
    for (const Matrix& p : projectors) {
      row.occupations.push_back((p * rho).trace().real());
    }
    row.trace = rho.trace().real();
    auto eig = hermitian_eig(rho, 1e-7);
    row.min_eig = eig.values(0);
    row.dist_to_limit = limit != nullptr
                            ? trace_norm(rho - *limit)
                            : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(std::move(row));
    if (i + 1 < points) current = step * current;
  }
  return rows;
}

}  // namespace qtransport
