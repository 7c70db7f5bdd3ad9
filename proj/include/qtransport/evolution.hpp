// evolution.hpp — semigroup propagation, long-time limits on hereditary
// subalgebras, attraction domains, level occupations and energy transfer
#pragma once

#include <string>
#include <vector>

#include "qtransport/lindblad.hpp"
#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/types.hpp"

namespace qtransport {

// T_t(rho0) = devec(e^{t L} vec rho0), re-Hermitized.
Matrix propagate(const ModelSpec& spec, const Matrix& rho0, double t);

// Caches the Liouvillian so repeated propagation reuses one assembly.
class Propagator {
 public:
  explicit Propagator(const ModelSpec& spec);
  Matrix at(const Matrix& rho0, double t) const;
  const Superoperator& liouvillian() const { return liouvillian_; }

 private:
  Superoperator liouvillian_;
};

// U_Z = ⊕_{n=0}^{N-1} Z^n U for U ⊆ V_1 ⊖ W.
SubspaceBasis u_z_subspace(const ModelSpec& spec, const SubspaceBasis& u);

// ||rho - P_{U_Z} rho P_{U_Z}||_F <= 1e-10.
bool hereditary_member(const ModelSpec& spec, const Matrix& rho,
                       const SubspaceBasis& u);

// Closed-form limit under the dimension hypothesis:
// eta = sum_k Z†^k P_{k+1} rho0 P_{k+1} Z^k,
// rho_inf = c_beta sum_n e^{sum beta} Z^n eta Z†^n.
Matrix limit_state(const ModelSpec& spec, const Matrix& rho0,
                   const SubspaceBasis& u);

struct NumericLimit {
  Matrix state;
  double t_converged = 0.0;
  double residual = 0.0;  // trace-norm step difference at convergence
};

// Propagates on a doubling time grid until ||rho_{2t} - rho_t||_tr <= tol.
NumericLimit limit_state_numeric(const ModelSpec& spec, const Matrix& rho0,
                                 double t_max = 0.0, double tolerance = 1e-9);

struct AttractionReport {
  bool in_domain = false;
  double eta_residual = 0.0;  // Frobenius gap in the eta condition
  double range_angle = 0.0;   // principal angle in the range condition
  int range_deficit = 0;      // dim(target ranges) - dim(rho0 ranges)
  std::string diagnostic;
};

// Both attraction-domain conditions for `target` (an invariant state of the
// canonical chain form over eta supported in U).
AttractionReport attraction_domain_check(const ModelSpec& spec,
                                         const Matrix& rho0,
                                         const Matrix& target,
                                         const SubspaceBasis& u);

// tr(rho_inf P_k) = c_beta e^{sum_{j<k} beta_j} for k = 1..N.
std::vector<double> limit_occupations(const ModelSpec& spec);

// tr((rho_inf - rho0) H_eff) with H_eff restricted to the hereditary
// subalgebra, i.e. sum_{k=1}^{N-1} (gamma_{-,k} P_k - gamma_{+,k} P_{k+1}).
double energy_transfer(const ModelSpec& spec, const Matrix& rho0,
                       const SubspaceBasis& u);

// H_eff as it acts on A_{U_Z} under the dimension hypothesis.
Matrix restricted_effective_hamiltonian(const ModelSpec& spec);

struct TrajectoryRow {
  double t = 0.0;
  std::vector<double> occupations;  // tr(rho_t P_k), k = 0..N+1
  double trace = 0.0;
  double min_eig = 0.0;
  double dist_to_limit = 0.0;  // trace norm; NaN when no limit is supplied
};

// Samples T_t(rho0) on a uniform grid of `points` times in [0, t_max].
std::vector<TrajectoryRow> evolve_trajectory(const ModelSpec& spec,
                                             const Matrix& rho0, double t_max,
                                             int points,
                                             const Matrix* limit = nullptr);

}  // namespace qtransport
