#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "qtransport/errors.hpp"
#include "qtransport/invariants.hpp"
#include "qtransport/lindblad.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/random.hpp"
#include "qtransport/transport.hpp"
#include "test_support.hpp"

using namespace qtransport;
using qtransport::testing::avk43;
using qtransport::testing::chain433;

namespace {

ModelSpec shiftless_avk() {
  PresetRates rates = default_rates(2);
  rates.shift_minus.assign(3, 0.0);
  rates.shift_plus.assign(3, 0.0);
  return avk_model(4, 3, rates);
}

}  // namespace

TEST_CASE("kraus operators") {
  const ModelSpec spec = avk43();
  const auto ops = kraus_operators(spec);
  REQUIRE(ops.size() == 6);

  SUBCASE("unit rates reproduce the transition operators") {
    CHECK(ops[0].first == "-,0");
    CHECK((ops[0].second - transition_operator(spec, 0)).norm() <= 1e-14);
  }
  SUBCASE("the closing upward operator vanishes") {
    CHECK(ops[5].first == "+,2");
    CHECK(ops[5].second.norm() == 0.0);
  }
  SUBCASE("operator norm squared carries the rate") {
    Eigen::JacobiSVD<Matrix> svd(ops[3].second);
    const double top = svd.singularValues()(0);
    CHECK(top * top == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("effective Hamiltonian") {
  SUBCASE("vanishing shifts give the zero matrix") {
    CHECK(effective_hamiltonian(shiftless_avk()).norm() == 0.0);
  }
  SUBCASE("hermitian by construction") {
    const Matrix h = effective_hamiltonian(avk43());
    CHECK((h - h.adjoint()).norm() <= 1e-14);
  }
}

TEST_CASE("generator annihilates the trivial invariant states") {
  const ModelSpec spec = avk43();
  const Vector sink = canonical_vector(spec, 3, 0);
  CHECK(apply_generator(spec, Matrix(sink * sink.adjoint())).norm() <= 1e-12);

  const Vector w = entangled_vector(spec, 1, 3);
  CHECK(apply_generator(spec, Matrix(w * w.adjoint())).norm() <= 1e-12);

  const Matrix bright = bright_projector(spec);
  CHECK(apply_generator(spec, bright).norm() > 0.1);
}

TEST_CASE("rewritten and raw GKSL forms agree") {
  Rng rng(13);
  for (const ModelSpec& spec : {avk43(), chain433()}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix x = rng.gaussian_matrix(spec.total_dim, spec.total_dim);
      const Matrix a = apply_generator(spec, x);
      const Matrix b = apply_generator_gksl(spec, x);
      CHECK((a - b).norm() <= 1e-10 * std::max(1.0, x.norm()));
    }
  }
}

TEST_CASE("generator preserves trace and hermiticity") {
  Rng rng(17);
  const ModelSpec spec = avk43();
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix x = rng.gaussian_matrix(9, 9);
    const Matrix lx = apply_generator(spec, x);
    CHECK(std::abs(lx.trace()) <= 1e-10 * x.norm());
    const Matrix lxd = apply_generator(spec, Matrix(x.adjoint()));
    CHECK((lxd - lx.adjoint()).norm() <= 1e-10 * x.norm());
  }
}

TEST_CASE("dual generator") {
  const ModelSpec spec = avk43();

  SUBCASE("unital") {
    CHECK(apply_dual(spec, Matrix::Identity(9, 9)).norm() <= 1e-10);
  }
  SUBCASE("duality pairing on random pairs") {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix rho = rng.hermitian(9);
      const Matrix x = rng.hermitian(9);
      const Complex lhs = (apply_generator(spec, rho) * x).trace();
      const Complex rhs = (rho * apply_dual(spec, x)).trace();
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
  SUBCASE("probability flows into the sink") {
    const Matrix p3 = level_projector(spec, 3);
    auto eig = hermitian_eig(apply_dual(spec, p3), 1e-8);
    CHECK(eig.values(0) >= -1e-12);
  }
}

TEST_CASE("liouvillian matrix represents the generator") {
  const ModelSpec spec = avk43();
  const Superoperator liou = liouvillian_matrix(spec);
  REQUIRE(liou.matrix.rows() == 81);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix x = rng.gaussian_matrix(9, 9);
    const Matrix via_matrix = devec(liou.matrix * vec(x), 9);
    CHECK((via_matrix - apply_generator(spec, x)).norm() <= 1e-11);
  }

  SUBCASE("sink state lies in the kernel") {
    const Vector sink = canonical_vector(spec, 3, 0);
    CHECK((liou.matrix * vec(Matrix(sink * sink.adjoint()))).norm() <= 1e-11);
  }
  SUBCASE("spectrum sits in the closed left half plane") {
    Eigen::ComplexEigenSolver<Matrix> eig(liou.matrix, false);
    double max_real = -1.0;
    for (Index i = 0; i < eig.eigenvalues().size(); ++i) {
      max_real = std::max(max_real, eig.eigenvalues()(i).real());
    }
    CHECK(max_real <= 1e-9);
  }
}

TEST_CASE("choi matrix of the propagator is positive") {
  const ModelSpec spec = avk43();
  const Superoperator liou = liouvillian_matrix(spec);
  for (double t : {0.1, 1.0}) {
    Superoperator prop{liou.dim, matrix_exp(liou.matrix, t)};
    auto eig = hermitian_eig(choi_matrix(prop), 1e-6);
    CHECK(eig.values(0) >= -1e-8);
  }
}

TEST_CASE("phi map") {
  const ModelSpec spec = avk43();
  const Matrix bright = bright_projector(spec);

  SUBCASE("states commuting with the bright projector are annihilated") {
    const Vector w = entangled_vector(spec, 1, 3);
    CHECK(phi_map(spec, Matrix(w * w.adjoint())).norm() <= 1e-13);
    CHECK(phi_map(spec, bright).norm() <= 1e-13);
  }
  SUBCASE("off-diagonal seed picks up the eta coefficient") {
    const Vector phi0 = entangled_vector(spec, 1, 0);
    const Vector phi1 = entangled_vector(spec, 1, 1);
    const Matrix rho = phi0 * phi1.adjoint();
    const Matrix expected = 4.0 * spec.eta_plus[0] * rho;
    CHECK((phi_map(spec, rho) - expected).norm() <= 1e-13);
  }
}

TEST_CASE("iterated commutators") {
  const ModelSpec spec = avk43();
  Rng rng(29);
  const Matrix x = rng.hermitian(9);

  CHECK((iterated_commutator(spec, x, 0) - x).norm() == 0.0);
  const Matrix h = effective_hamiltonian(spec);
  CHECK(iterated_commutator(spec, h, 3).norm() <= 1e-12);
  CHECK(iterated_commutator(shiftless_avk(), x, 1).norm() == 0.0);

  const Matrix once = iterated_commutator(spec, x, 1);
  CHECK((once - (h * x - x * h)).norm() <= 1e-13);
  const Matrix twice = iterated_commutator(spec, x, 2);
  CHECK((twice - (h * once - once * h)).norm() <= 1e-13);
}
