#include "qtransport/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "qtransport/errors.hpp"
#include "qtransport/evolution.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/lindblad.hpp"
#include "qtransport/model.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/presets.hpp"
#include "qtransport/random.hpp"
#include "qtransport/spectrum.hpp"
#include "qtransport/transport.hpp"

namespace qtransport::verify {

namespace {

std::string fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

// The two fixed reference models of the suite.
ModelSpec reference_avk() { return avk_model(4, 3); }

ModelSpec reference_n3() {
  ModelSpec raw;
  raw.num_levels = 3;
  raw.dims = {1, 4, 3, 3, 1};
  raw.energies = {10.0, 6.0, 3.0, 1.0, 0.0};
  raw.gamma_minus = {1.0, 1.0, 1.0, 1.0};
  raw.gamma_plus = {0.5, 0.5, 0.5, 0.0};
  raw.shift_minus = {0.1, 0.1, 0.1, 0.1};
  raw.shift_plus = {0.1, 0.1, 0.1, 0.1};
  return validate_spec(std::move(raw));
}

// Random DH model with a non-trivial tau carrier (dim V_1 ⊖ W >= 1).
ModelSpec random_dh_spec(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ModelSpec spec = random_spec(rng, 4, 5, /*force_dh=*/true);
    if (spec.num_levels >= 2 && spec.level_dim(2) >= 3 &&
        v1_minus_w(spec).dim() >= 1) {
      return spec;
    }
  }
  throw Error("random_dh_spec: no suitable model found");
}

struct Criterion {
  std::string name;
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.str().empty()) detail << "; ";
      detail << what;
    }
  }
};

// ---- 1: operator algebra ---------------------------------------------------

void run_operator_algebra(Rng& rng, Criterion& crit) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const ModelSpec spec = random_spec(rng, 4, 5);
    const Matrix z = transport_operator(spec);
    const double n1 = spec.level_dim(1);

    for (int k = 1; k <= spec.num_levels; ++k) {
      const Matrix zk = transition_operator(spec, k);
      worst = std::max(worst,
                       (zk * zk.adjoint() - level_projector(spec, k + 1)).norm());
    }
    const Matrix z0 = transition_operator(spec, 0);
    worst = std::max(worst,
                     (z0 * z0.adjoint() - n1 * bright_projector(spec)).norm());

    Matrix ztz_expected = n1 * level_projector(spec, 0);
    for (int k = 1; k <= spec.num_levels; ++k) {
      ztz_expected += abs_z(spec, k);
    }
    worst = std::max(worst, (z.adjoint() * z - ztz_expected).norm());

    for (int k = 1; k <= spec.num_levels - 1; ++k) {
      for (int p = 1; k + p <= spec.num_levels + 1; ++p) {
        transport_power_on_zero(spec, k, p);  // throws above 1e-12
      }
    }
  }
  crit.require(worst <= 1e-11, "operator identity residual " + fmt(worst));
  crit.detail << "max residual " << fmt(worst) << " over 20 random specs";
}

// ---- 2: generator consistency ----------------------------------------------

void run_generator_consistency(Rng& rng, Criterion& crit) {
  std::vector<ModelSpec> specs = {reference_avk(), reference_n3()};
  for (int i = 0; i < 3; ++i) specs.push_back(random_spec(rng, 4, 5));

  double worst_forms = 0.0, worst_trace = 0.0, worst_herm = 0.0,
         worst_dual = 0.0;
  for (const auto& spec : specs) {
    const Index d = spec.total_dim;
    for (int pair = 0; pair < 50; ++pair) {
      const Matrix rho = rng.hermitian(d);
      const Matrix x = rng.hermitian(d);
      const Matrix lrho = apply_generator(spec, rho);
      const double scale = std::max(1.0, rho.norm());

      worst_forms = std::max(
          worst_forms, (lrho - apply_generator_gksl(spec, rho)).norm() / scale);
      worst_trace =
          std::max(worst_trace, std::abs(lrho.trace()) / rho.norm());
      worst_herm = std::max(
          worst_herm,
          (apply_generator(spec, Matrix(rho.adjoint())) - lrho.adjoint())
                  .norm() /
              rho.norm());
      const Complex lhs = (lrho * x).trace();
      const Complex rhs = (rho * apply_dual(spec, x)).trace();
      worst_dual = std::max(
          worst_dual, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  crit.require(worst_forms <= 1e-10, "form mismatch " + fmt(worst_forms));
  crit.require(worst_trace <= 1e-10, "trace leak " + fmt(worst_trace));
  crit.require(worst_herm <= 1e-10, "hermiticity " + fmt(worst_herm));
  crit.require(worst_dual <= 1e-10, "duality " + fmt(worst_dual));
  crit.detail << "forms " << fmt(worst_forms) << ", trace " << fmt(worst_trace)
              << ", herm " << fmt(worst_herm) << ", dual " << fmt(worst_dual);
}

// ---- 3: fast recurrent subspace --------------------------------------------

std::vector<ModelSpec> frs_models(Rng& rng) {
  std::vector<ModelSpec> specs = {reference_avk(), reference_n3(), kv_model(1),
                                  kv_model(3)};
  for (int i = 0; i < 10; ++i) specs.push_back(random_spec(rng, 4, 5));
  return specs;
}

void run_fast_recurrent(Rng& rng, Criterion& crit,
                        std::vector<ModelSpec>* models_out,
                        std::vector<SteadyStateResult>* oracles_out) {
  const auto start = std::chrono::steady_clock::now();
  double worst_angle = 0.0;
  auto specs = frs_models(rng);
  for (const auto& spec : specs) {
    const SubspaceBasis analytic = fast_recurrent_subspace(spec);
    SteadyStateResult oracle = numeric_steady_state(spec);
    double angle = 0.0;
    const bool equal =
        subspace_equal(analytic, oracle.support, tol::angle, &angle);
    crit.require(equal, "support mismatch (dims " +
                            std::to_string(analytic.dim()) + " vs " +
                            std::to_string(oracle.support.dim()) + ", angle " +
                            fmt(angle) + ")");
    worst_angle = std::max(worst_angle, angle);
    if (oracles_out != nullptr) oracles_out->push_back(std::move(oracle));
  }
  if (models_out != nullptr) *models_out = std::move(specs);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  crit.require(elapsed <= 30.0, "runtime over budget");
  crit.detail << "max principal angle " << fmt(worst_angle) << " over "
              << "14 models";
}

// ---- 4: invariant-state construction ---------------------------------------

void run_invariant_construction(Rng& rng, Criterion& crit,
                                const std::vector<ModelSpec>& oracle_models,
                                const std::vector<SteadyStateResult>& oracles) {
  std::vector<ModelSpec> specs = {reference_avk(), reference_n3(),
                                  random_dh_spec(rng)};
  double worst_residual = 0.0, worst_balance = 0.0, worst_roundtrip = 0.0;
  for (const auto& spec : specs) {
    const SubspaceBasis carrier = v1_minus_w(spec);
    const SubspaceBasis w = interaction_free_subspace(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix tau = rng.density_on(carrier);
      const Matrix rho = build_invariant_from_tau(spec, tau);
      worst_residual =
          std::max(worst_residual, apply_generator(spec, rho).norm());
      for (double r : detailed_balance_check(spec, rho)) {
        worst_balance = std::max(worst_balance, r);
      }

      // Convex mix with a W-state and the sink, then decompose.
      const double a = 0.5 + 0.3 * rng.uniform();
      const double b = w.dim() > 0 ? (1.0 - a) * rng.uniform() : 0.0;
      const double l = 1.0 - a - b;
      Matrix mixed = a * build_invariant_from_tau(spec, tau);
      Matrix eta;
      if (w.dim() > 0 && b > 0.0) {
        eta = rng.density_on(w);
        mixed += b * eta;
      }
      const Vector sink = canonical_vector(spec, spec.num_levels + 1, 0);
      mixed += l * (sink * sink.adjoint());

      const InvariantDecomposition dec = decompose_invariant(spec, mixed);
      worst_roundtrip = std::max(worst_roundtrip, std::abs(dec.alpha - a));
      worst_roundtrip = std::max(worst_roundtrip, std::abs(dec.beta - b));
      worst_roundtrip = std::max(worst_roundtrip, std::abs(dec.lambda - l));
      if (dec.tau) {
        const Matrix tau_norm = tau / tau.trace().real();
        worst_roundtrip = std::max(worst_roundtrip, (*dec.tau - tau_norm).norm());
      }
      if (b > 0.0 && dec.eta) {
        worst_roundtrip = std::max(worst_roundtrip, (*dec.eta - eta).norm());
      }
    }
  }
  crit.require(worst_residual <= 1e-11,
               "generator residual " + fmt(worst_residual));
  crit.require(worst_balance <= 1e-10,
               "detailed balance " + fmt(worst_balance));
  crit.require(worst_roundtrip <= 1e-9, "round trip " + fmt(worst_roundtrip));

  bool all_dark = true;
  for (size_t i = 0; i < oracles.size(); ++i) {
    if (!is_dark(oracle_models[i], oracles[i].state)) all_dark = false;
  }
  crit.require(all_dark, "oracle steady state not dark");
  crit.detail << "residual " << fmt(worst_residual) << ", balance "
              << fmt(worst_balance) << ", round trip " << fmt(worst_roundtrip)
              << ", oracle states dark: " << (all_dark ? "yes" : "no");
}

// ---- 5: spectrum formulas ---------------------------------------------------

void run_spectrum(Rng& rng, Criterion& crit) {
  std::vector<ModelSpec> specs = {reference_avk(), reference_n3(),
                                  avk_model(5, 4)};
  double worst = 0.0;
  for (const auto& spec : specs) {
    const SubspaceBasis carrier = v1_minus_w(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix tau = rng.density_on(carrier);
      const Matrix rho = build_invariant_from_tau(spec, tau);
      const auto report = spectrum_decomposition_check(spec, rho);
      worst = std::max(worst, report.max_deviation);
      crit.require(report.pass, "spectrum check failed (deviation " +
                                    fmt(report.max_deviation) + ")");
    }
  }
  crit.require(worst <= 1e-10, "multiset deviation " + fmt(worst));

  // AVK extremal eigenvalues for e^{beta_1} in {2, 5, 10}.
  double worst_extremal = 0.0;
  for (double ratio : {2.0, 5.0, 10.0}) {
    PresetRates rates = default_rates(2);
    rates.gamma_minus[1] = ratio * rates.gamma_plus[1];
    const ModelSpec spec = avk_model(4, 3, rates);
    const Vector u = rng.unit_vector_in(v1_minus_w(spec));
    const Matrix rho = extremal_invariant_from_vector(spec, u);
    auto eig = hermitian_eig(rho);
    const Index d = spec.total_dim;
    const double lo = 1.0 / (1.0 + ratio);
    const double hi = ratio / (1.0 + ratio);
    worst_extremal =
        std::max(worst_extremal, std::abs(eig.values(d - 1) - hi));
    worst_extremal =
        std::max(worst_extremal, std::abs(eig.values(d - 2) - lo));
  }
  crit.require(worst_extremal <= 1e-12,
               "extremal eigenvalues " + fmt(worst_extremal));
  crit.detail << "multiset " << fmt(worst) << ", extremal eigenvalues "
              << fmt(worst_extremal);
}

// ---- 6: long-time asymptotics ----------------------------------------------

void run_asymptotics(Rng& rng, Criterion& crit) {
  double worst_limit = 0.0, worst_occ = 0.0, worst_spread = 0.0,
         worst_offdiag = 0.0;
  for (const ModelSpec& spec : {reference_avk(), reference_n3()}) {
    const SubspaceBasis u = v1_minus_w(spec);
    const SubspaceBasis uz = u_z_subspace(spec, u);
    const auto expected = limit_occupations(spec);

    std::vector<std::vector<double>> seen_occupations;
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix rho0 = rng.density_on(uz);
      const Matrix analytic = limit_state(spec, rho0, u);
      const NumericLimit numeric = limit_state_numeric(spec, rho0);
      worst_limit =
          std::max(worst_limit, trace_norm(analytic - numeric.state));

      std::vector<double> occ;
      for (int k = 1; k <= spec.num_levels; ++k) {
        occ.push_back(
            (level_projector(spec, k) * numeric.state).trace().real());
        worst_occ = std::max(
            worst_occ,
            std::abs(occ.back() - expected[static_cast<size_t>(k - 1)]));
      }
      seen_occupations.push_back(std::move(occ));

      for (int h = 0; h <= spec.num_levels + 1; ++h) {
        for (int k = 0; k <= spec.num_levels + 1; ++k) {
          if (h == k) continue;
          worst_offdiag = std::max(
              worst_offdiag, (level_projector(spec, h) * numeric.state *
                              level_projector(spec, k))
                                 .norm());
        }
      }
    }
    for (size_t i = 1; i < seen_occupations.size(); ++i) {
      for (size_t k = 0; k < seen_occupations[i].size(); ++k) {
        worst_spread = std::max(
            worst_spread,
            std::abs(seen_occupations[i][k] - seen_occupations[0][k]));
      }
    }
  }
  crit.require(worst_limit <= 1e-8, "analytic vs numeric " + fmt(worst_limit));
  crit.require(worst_occ <= 1e-8, "occupations " + fmt(worst_occ));
  crit.require(worst_spread <= 1e-8, "occupation spread " + fmt(worst_spread));
  crit.require(worst_offdiag <= 1e-9, "off-diagonal blocks " + fmt(worst_offdiag));
  crit.detail << "limits " << fmt(worst_limit) << ", occupations "
              << fmt(worst_occ) << ", spread " << fmt(worst_spread)
              << ", off-diagonal " << fmt(worst_offdiag);
}

// ---- 7: attraction domain ---------------------------------------------------

void run_attraction(Rng& rng, Criterion& crit) {
  const ModelSpec spec = reference_avk();
  const SubspaceBasis u = v1_minus_w(spec);
  const SubspaceBasis uz = u_z_subspace(spec, u);

  int agreements = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho0 = rng.density_on(uz);
    const Matrix target = limit_state(spec, rho0, u);
    const bool predicted = attraction_domain_check(spec, rho0, target, u).in_domain;
    const NumericLimit numeric = limit_state_numeric(spec, rho0);
    const bool brute = trace_norm(numeric.state - target) <= 1e-7;
    if (predicted == brute && predicted) ++agreements;
  }
  crit.require(agreements == 10, "positive cases " + std::to_string(agreements) + "/10");

  // The carrier U is one-dimensional here, so every state of A_{U_Z} shares
  // one limit; negatives need mass outside the hereditary subalgebra.
  const SubspaceBasis w = interaction_free_subspace(spec);
  const Vector sink = canonical_vector(spec, spec.num_levels + 1, 0);
  int negatives = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix inside = rng.density_on(uz);
    const Matrix target = limit_state(spec, inside, u);
    const double mass = rng.uniform(0.3, 0.7);
    const Matrix outside = rng.uniform() < 0.5
                               ? rng.density_on(w)
                               : Matrix(sink * sink.adjoint());
    const Matrix rho0 = (1.0 - mass) * inside + mass * outside;
    const bool predicted = attraction_domain_check(spec, rho0, target, u).in_domain;
    const NumericLimit numeric = limit_state_numeric(spec, rho0);
    const bool brute = trace_norm(numeric.state - target) <= 1e-7;
    if (predicted == brute && !predicted) ++negatives;
  }
  crit.require(negatives == 10, "negative cases " + std::to_string(negatives) + "/10");
  crit.detail << "10/10 positive and 10/10 negative verdicts agree with propagation";
}

// ---- 8: photosynthesis models -----------------------------------------------

void run_models(Rng& rng, Criterion& crit) {
  // KV with a single intermediate state: the sink is the only steady state.
  {
    const ModelSpec spec = kv_model(1);
    const SteadyStateResult oracle = numeric_steady_state(spec);
    const Vector sink = canonical_vector(spec, 2, 0);
    const Matrix expected = sink * sink.adjoint();
    crit.require(oracle.kernel.dim() == 1,
                 "kv(1) kernel dim " + std::to_string(oracle.kernel.dim()));
    crit.require((oracle.state - expected).norm() <= 1e-9,
                 "kv(1) steady state " + fmt((oracle.state - expected).norm()));
  }
  // KV with n1 = 3: R_L has dim 3 and the whole hereditary subalgebra of
  // R_L consists of invariant states.
  {
    const ModelSpec spec = kv_model(3);
    const SubspaceBasis rl = fast_recurrent_subspace(spec);
    crit.require(rl.dim() == 3, "kv(3) R dim " + std::to_string(rl.dim()));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix rho = rng.density_on(rl);
      worst = std::max(worst, apply_generator(spec, rho).norm());
    }
    crit.require(worst <= 1e-10, "kv(3) hereditary states " + fmt(worst));
    crit.detail << "kv hereditary residual " << fmt(worst);
  }
  // AVK: V matches the explicit difference-basis description.
  for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{{4, 3}, {5, 4}}) {
    const ModelSpec spec = avk_model(n1, n2);
    const SubspaceBasis v = harmonic_subspace_v(spec);
    std::vector<Vector> cols;
    for (int a = 1; a + 1 <= n2 - 1; ++a) {
      cols.push_back(entangled_vector(spec, 1, a) -
                     entangled_vector(spec, 1, a + 1));
      cols.push_back(entangled_vector(spec, 2, a) -
                     entangled_vector(spec, 2, a + 1));
    }
    for (int a = n2; a < n1; ++a) {
      cols.push_back(entangled_vector(spec, 1, a));
    }
    Matrix stacked(spec.total_dim, static_cast<Index>(cols.size()));
    for (size_t i = 0; i < cols.size(); ++i) {
      stacked.col(static_cast<Index>(i)) = cols[i];
    }
    const SubspaceBasis described = orthonormalize(spec.total_dim, stacked);
    double angle = 0.0;
    crit.require(subspace_equal(v, described, 1e-10, &angle),
                 "avk V description angle " + fmt(angle));
  }
  // AVK closed-form limits versus numeric propagation.
  {
    const ModelSpec spec = reference_avk();
    const double eb1 = std::exp(spec.beta[1]);
    const double norm = 1.0 / std::sqrt(1.0 + eb1);
    double worst = 0.0;

    const Vector u1 = norm * rng.unit_vector_in(v1_minus_w(spec));
    const Matrix formula1 = avk_limit_formula(spec, AvkVariant::Level1, u1);
    const Vector unit1 = u1 / u1.norm();
    const NumericLimit numeric1 =
        limit_state_numeric(spec, Matrix(unit1 * unit1.adjoint()));
    worst = std::max(worst, trace_norm(formula1 - numeric1.state));

    const Vector u2 = norm * rng.unit_vector_in(v_level(spec, 2));
    const Matrix formula2 = avk_limit_formula(spec, AvkVariant::Level2, u2);
    const Vector unit2 = u2 / u2.norm();
    const NumericLimit numeric2 =
        limit_state_numeric(spec, Matrix(unit2 * unit2.adjoint()));
    worst = std::max(worst, trace_norm(formula2 - numeric2.state));

    crit.require(worst <= 1e-8, "avk limit formulas " + fmt(worst));
    crit.detail << ", avk limit gap " << fmt(worst);
  }
}

// ---- 9: commutant / fixed points ---------------------------------------------

void run_commutant(Criterion& crit) {
  for (const ModelSpec& spec : {reference_avk(), kv_model(3)}) {
    const SubspaceBasis basis = commutant_c0(spec);
    const Superoperator liou = liouvillian_matrix(spec);
    const Matrix dual_prop = matrix_exp(liou.matrix.adjoint(), 1.0);
    double worst_fix = 0.0, worst_dual = 0.0;
    for (int i = 0; i < basis.dim(); ++i) {
      const Matrix x = devec(basis.vectors.col(i), spec.total_dim);
      worst_dual = std::max(worst_dual, apply_dual(spec, x).norm());
      const Matrix moved = devec(dual_prop * vec(x), spec.total_dim);
      worst_fix = std::max(worst_fix, (moved - x).norm());
    }
    crit.require(worst_dual <= 1e-9, "dual residual " + fmt(worst_dual));
    crit.require(worst_fix <= 1e-8, "dual propagator fix " + fmt(worst_fix));
    crit.detail << "dim " << basis.dim() << " fix " << fmt(worst_fix) << "; ";
  }
}

std::vector<CriterionResult> run_core(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CriterionResult> results;
  std::vector<ModelSpec> frs_specs;
  std::vector<SteadyStateResult> frs_oracles;

  const std::vector<std::string> names = {
      "operator algebra identities",
      "generator consistency and duality",
      "fast recurrent subspace vs numeric oracle",
      "invariant-state construction and decomposition",
      "closed-form spectra",
      "long-time asymptotics under the dimension hypothesis",
      "attraction domain vs propagation",
      "photosynthesis model reproductions",
      "commutant fixed points",
  };

  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    Criterion crit;
    crit.name = names[static_cast<size_t>(i)];
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (i) {
        case 0: run_operator_algebra(rng, crit); break;
        case 1: run_generator_consistency(rng, crit); break;
        case 2: run_fast_recurrent(rng, crit, &frs_specs, &frs_oracles); break;
        case 3: run_invariant_construction(rng, crit, frs_specs, frs_oracles); break;
        case 4: run_spectrum(rng, crit); break;
        case 5: run_asymptotics(rng, crit); break;
        case 6: run_attraction(rng, crit); break;
        case 7: run_models(rng, crit); break;
        case 8: run_commutant(crit); break;
        default: break;
      }
    } catch (const std::exception& e) {
      crit.pass = false;
      crit.detail << "exception: " << e.what();
    }
    CriterionResult result;
    result.index = i + 1;
    result.name = crit.name;
    result.pass = crit.pass;
    result.detail = crit.detail.str();
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = run_core(seed);
  const double first_elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  // Reproducibility: a second pass with the same seed must render the same
  // report, and the whole suite must fit the time budget.
  CriterionResult repro;
  repro.index = 10;
  repro.name = "runtime budget and seed reproducibility";
  const auto again_start = std::chrono::steady_clock::now();
  const std::vector<CriterionResult> again = run_core(seed);
  repro.seconds = first_elapsed + std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() -
                                      again_start)
                                      .count();
  const bool identical = render_report(results, seed) == render_report(again, seed);
  const bool in_budget = first_elapsed <= 60.0;
  repro.pass = identical && in_budget;
  repro.detail = std::string("report byte-identical across reruns: ") +
                 (identical ? "yes" : "no") +
                 "; runtime within budget: " + (in_budget ? "yes" : "no");
  results.push_back(std::move(repro));
  return results;
}

std::string render_report(const std::vector<CriterionResult>& results,
                          std::uint64_t seed) {
  std::ostringstream out;
  out << "verification report (seed " << seed << ")\n";
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name;
    if (!r.detail.empty()) out << " — " << r.detail;
    out << "\n";
  }
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace qtransport::verify
