#include <doctest.h>

#include <cmath>

#include "qtransport/errors.hpp"
#include "qtransport/evolution.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/random.hpp"
#include "qtransport/spectrum.hpp"
#include "qtransport/transport.hpp"
#include "test_support.hpp"

using namespace qtransport;
using qtransport::testing::avk43;
using qtransport::testing::chain433;

namespace {

Vector difference_seed(const ModelSpec& spec) {
  Vector u = entangled_vector(spec, 1, 1) - entangled_vector(spec, 1, 2);
  return u / u.norm();
}

}  // namespace

TEST_CASE("propagation basics") {
  const ModelSpec spec = avk43();
  Rng rng(61);
  const Matrix rho0 = rng.density(9);

  SUBCASE("zero time is the identity map") {
    CHECK((propagate(spec, rho0, 0.0) - rho0).norm() <= 1e-13);
  }
  SUBCASE("trace is preserved") {
    const Matrix rho = propagate(spec, rho0, 2.5);
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-10);
    auto eig = hermitian_eig(rho, 1e-8);
    CHECK(eig.values(0) >= -1e-8);
  }
  SUBCASE("semigroup property") {
    const Matrix one = propagate(spec, propagate(spec, rho0, 0.7), 1.3);
    const Matrix two = propagate(spec, rho0, 2.0);
    CHECK((one - two).norm() <= 1e-8);
  }
  SUBCASE("invariant states are fixed") {
    const Vector u = difference_seed(spec);
    const Matrix rho = build_invariant_from_tau(spec, Matrix(u * u.adjoint()));
    CHECK((propagate(spec, rho, 5.0) - rho).norm() <= 1e-9);
  }
  SUBCASE("excitation decays out of the source level") {
    const Vector src = canonical_vector(spec, 0, 0);
    const Matrix source_state = src * src.adjoint();
    const Matrix p0 = level_projector(spec, 0);
    double previous = 1.0;
    for (double t = 0.5; t <= 10.0; t += 0.5) {
      const double occ =
          (p0 * propagate(spec, source_state, t)).trace().real();
      CHECK(occ < previous);
      previous = occ;
    }
  }
}

TEST_CASE("hereditary chain subspace") {
  const ModelSpec spec = avk43();
  const SubspaceBasis u = v1_minus_w(spec);
  const SubspaceBasis uz = u_z_subspace(spec, u);
  CHECK(uz.dim() == 2);
  CHECK(uz.gram_defect() <= 1e-12);

  const SubspaceBasis w = interaction_free_subspace(spec);
  CHECK((w.vectors.adjoint() * uz.vectors).norm() <= 1e-12);
  const Vector sink = canonical_vector(spec, 3, 0);
  CHECK((sink.adjoint() * uz.vectors).norm() <= 1e-12);

  SUBCASE("membership") {
    Rng rng(67);
    const Matrix inside = rng.density_on(uz);
    CHECK(hereditary_member(spec, inside, u));
    CHECK_FALSE(hereditary_member(spec, Matrix(sink * sink.adjoint()), u));
  }
  SUBCASE("support violations are refused") {
    SubspaceBasis bad{spec.total_dim, canonical_vector(spec, 1, 0)};
    CHECK_THROWS_AS(u_z_subspace(spec, bad), SupportViolation);
  }
}

TEST_CASE("closed-form limit on the reference chain") {
  const ModelSpec spec = avk43();
  const SubspaceBasis u = v1_minus_w(spec);
  const Vector seed = difference_seed(spec);

  SUBCASE("invariant states are their own limit") {
    const Matrix rho =
        build_invariant_from_tau(spec, Matrix(seed * seed.adjoint()));
    CHECK(trace_norm(limit_state(spec, rho, u) - rho) <= 1e-10);
  }
  SUBCASE("level-2 pure state relaxes to the extremal chain state") {
    const Vector zu = transport_operator(spec) * seed;
    const Matrix rho0 = zu * zu.adjoint();
    const Matrix limit = limit_state(spec, rho0, u);
    auto eig = hermitian_eig(limit);
    CHECK(eig.values(8) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(eig.values(7) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(is_invariant(spec, limit));
  }
  SUBCASE("matches the explicit two-level expression") {
    Rng rng(71);
    const Matrix rho0 = rng.density_on(u_z_subspace(spec, u));
    const Matrix z1 = transition_operator(spec, 1);
    const Matrix p1 = level_projector(spec, 1);
    const Matrix p2 = level_projector(spec, 2);
    const double eb1 = std::exp(spec.beta[1]);
    const Matrix expected =
        (p1 * rho0 * p1 + z1.adjoint() * rho0 * z1 +
         eb1 * (p2 * rho0 * p2 + z1 * rho0 * z1.adjoint())) /
        (1.0 + eb1);
    CHECK((limit_state(spec, rho0, u) - expected).norm() <= 1e-12);
  }
  SUBCASE("membership is required") {
    const Vector sink = canonical_vector(spec, 3, 0);
    CHECK_THROWS_AS(
        limit_state(spec, Matrix(sink * sink.adjoint()), u), NotInSubalgebra);
  }
}

TEST_CASE("numeric limit agrees with the closed form") {
  Rng rng(73);
  for (const ModelSpec& spec : {avk43(), chain433()}) {
    const SubspaceBasis u = v1_minus_w(spec);
    const SubspaceBasis uz = u_z_subspace(spec, u);
    const Matrix rho0 = rng.density_on(uz);

    const Matrix analytic = limit_state(spec, rho0, u);
    const NumericLimit numeric = limit_state_numeric(spec, rho0);
    CHECK(trace_norm(analytic - numeric.state) <= 1e-8);
    CHECK(numeric.t_converged <= 1e4);
    CHECK(is_invariant(spec, numeric.state, 1e-9));

    // Off-diagonal inter-level blocks die out.
    for (int h = 1; h <= spec.num_levels; ++h) {
      for (int k = 1; k <= spec.num_levels; ++k) {
        if (h == k) continue;
        CHECK((level_projector(spec, h) * numeric.state *
               level_projector(spec, k))
                  .norm() <= 1e-9);
      }
    }
  }
}

TEST_CASE("limit occupations") {
  SUBCASE("reference chain") {
    const auto occ = limit_occupations(avk43());
    REQUIRE(occ.size() == 2);
    CHECK(occ[0] == doctest::Approx(1.0 / 3.0));
    CHECK(occ[1] == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("balanced rates spread uniformly") {
    PresetRates rates = default_rates(2);
    rates.gamma_minus[1] = 0.5;
    const auto occ = limit_occupations(avk_model(4, 3, rates));
    CHECK(occ[0] == doctest::Approx(0.5));
    CHECK(occ[1] == doctest::Approx(0.5));
  }
  SUBCASE("occupations of propagated states match and are state-independent") {
    const ModelSpec spec = avk43();
    const SubspaceBasis u = v1_minus_w(spec);
    const SubspaceBasis uz = u_z_subspace(spec, u);
    Rng rng(79);
    const auto expected = limit_occupations(spec);
    for (int trial = 0; trial < 2; ++trial) {
      const Matrix rho0 = rng.density_on(uz);
      const Matrix limit = limit_state_numeric(spec, rho0).state;
      for (int k = 1; k <= 2; ++k) {
        const double occ =
            (level_projector(spec, k) * limit).trace().real();
        CHECK(std::abs(occ - expected[static_cast<size_t>(k - 1)]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("attraction domain verdicts") {
  const ModelSpec spec = avk43();
  const SubspaceBasis u = v1_minus_w(spec);
  const SubspaceBasis uz = u_z_subspace(spec, u);
  Rng rng(83);

  SUBCASE("a state is attracted to its own limit") {
    const Matrix rho0 = rng.density_on(uz);
    const Matrix target = limit_state(spec, rho0, u);
    const auto report = attraction_domain_check(spec, rho0, target, u);
    CHECK(report.in_domain);
    CHECK(report.eta_residual <= 1e-9);
  }
  SUBCASE("an invariant target attracts itself") {
    const Vector seed = difference_seed(spec);
    const Matrix target =
        build_invariant_from_tau(spec, Matrix(seed * seed.adjoint()));
    CHECK(attraction_domain_check(spec, target, target, u).in_domain);
  }
  SUBCASE("mismatched seed is rejected") {
    const Matrix rho0 = rng.density_on(uz);
    Matrix other = rng.density_on(uz);
    const Matrix target = limit_state(spec, other, u);
    const auto report = attraction_domain_check(spec, rho0, target, u);
    CHECK_FALSE(report.in_domain);
  }
}

TEST_CASE("range deficit shows up in the diagnostics") {
  // Needs a two-dimensional carrier: avk(5, 4).
  const ModelSpec spec = avk_model(5, 4);
  const SubspaceBasis u = v1_minus_w(spec);
  REQUIRE(u.dim() == 2);

  // Full-rank eta as the target seed; a rank-one initial state cannot
  // reach it.
  const Matrix eta = u.projector() / 2.0;
  const Matrix target = c_beta(spec) * transport_chain_sum(spec, eta);

  const Vector seed = u.vectors.col(0);
  const Matrix rho0 = seed * seed.adjoint();
  const auto report = attraction_domain_check(spec, rho0, target, u);
  CHECK_FALSE(report.in_domain);
  CHECK(report.range_deficit > 0);
  CHECK(report.diagnostic.find("range deficit") != std::string::npos);
}

TEST_CASE("energy transfer") {
  const ModelSpec spec = chain433();
  const SubspaceBasis u = v1_minus_w(spec);
  Rng rng(89);

  SUBCASE("invariant states exchange nothing") {
    const Matrix rho = build_invariant_from_tau(spec, rng.density_on(u));
    CHECK(std::abs(energy_transfer(spec, rho, u)) <= 1e-10);
  }
  SUBCASE("vanishing shifts exchange nothing") {
    PresetRates rates = default_rates(2);
    rates.shift_minus.assign(3, 0.0);
    rates.shift_plus.assign(3, 0.0);
    const ModelSpec flat = avk_model(4, 3, rates);
    const SubspaceBasis fu = v1_minus_w(flat);
    const Matrix rho0 = rng.density_on(u_z_subspace(flat, fu));
    CHECK(energy_transfer(flat, rho0, fu) == doctest::Approx(0.0));
  }
  SUBCASE("transfer from a level is state-independent and explicit") {
    // Two different pure states supported on Z U.
    const Matrix z = transport_operator(spec);
    const Vector a = z * rng.unit_vector_in(u);
    const Vector b = z * rng.unit_vector_in(u);
    const double ta = energy_transfer(spec, Matrix(a * a.adjoint()), u);
    const double tb = energy_transfer(spec, Matrix(b * b.adjoint()), u);
    CHECK(std::abs(ta - tb) <= 1e-10);

    // Closed form for a state on level k = 2 (supported in Z^{k-1} U).
    const double cb = c_beta(spec);
    const int k = 2;
    double expected = spec.shift_plus[k - 1] - spec.shift_minus[k];
    for (int m = 1; m <= spec.num_levels - 1; ++m) {
      expected += cb * spec.beta_prefix_exp(m - 1) *
                  (spec.shift_minus[static_cast<size_t>(m)] -
                   spec.shift_plus[static_cast<size_t>(m)] *
                       std::exp(spec.beta[static_cast<size_t>(m)]));
    }
    CHECK(ta == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("trajectory sampling") {
  const ModelSpec spec = avk43();
  const SubspaceBasis u = v1_minus_w(spec);
  const SubspaceBasis uz = u_z_subspace(spec, u);
  Rng rng(97);
  const Matrix rho0 = rng.density_on(uz);
  const Matrix limit = limit_state(spec, rho0, u);

  const auto rows = evolve_trajectory(spec, rho0, 20.0, 41, &limit);
  REQUIRE(rows.size() == 41);
  CHECK(rows.front().t == 0.0);
  CHECK(rows.back().t == doctest::Approx(20.0));

  double previous = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    CHECK(std::abs(row.trace - 1.0) <= 1e-9);
    CHECK(row.min_eig >= -1e-8);
    CHECK(row.occupations.size() == 4);
    // Approach to the limit is monotone on the sampled grid.
    CHECK(row.dist_to_limit <= previous + 1e-12);
    previous = row.dist_to_limit;
  }
  CHECK(rows.back().dist_to_limit <= 1e-6);
}
