#include <doctest.h>

#include <cmath>

#include "qtransport/errors.hpp"
#include "qtransport/numerics.hpp"
#include "qtransport/random.hpp"

using namespace qtransport;

TEST_CASE("hermitian_eig on fixed matrices") {
  Matrix ident = Matrix::Identity(3, 3);
  auto eig = hermitian_eig(ident);
  for (int i = 0; i < 3; ++i) CHECK(eig.values(i) == doctest::Approx(1.0));

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 2.0;
  diag(1, 1) = -1.0;
  eig = hermitian_eig(diag);
  CHECK(eig.values(0) == doctest::Approx(-1.0));
  CHECK(eig.values(1) == doctest::Approx(2.0));
}

TEST_CASE("hermitian_eig reconstructs a random Hermitian matrix") {
  Rng rng(7);
  const Matrix a = rng.hermitian(9);
  auto eig = hermitian_eig(a);
  const Matrix rebuilt =
      eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
  CHECK((a - rebuilt).norm() <= 1e-10 * std::max(1.0, a.norm()));
  CHECK((eig.vectors.adjoint() * eig.vectors - Matrix::Identity(9, 9)).norm() <=
        1e-10);
}

TEST_CASE("hermitian_eig rejects a non-Hermitian matrix") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(bad), NotHermitian);
}

TEST_CASE("matrix_exp basics") {
  const Matrix zero = Matrix::Zero(4, 4);
  CHECK((matrix_exp(zero, 3.7) - Matrix::Identity(4, 4)).norm() <= 1e-14);

  Matrix decay = Matrix::Zero(1, 1);
  decay(0, 0) = -1.0;
  CHECK(std::abs(matrix_exp(decay, 1.0)(0, 0) - std::exp(-1.0)) <= 1e-14);

  // Nilpotent upper shift: the series truncates after the linear term.
  Matrix shift = Matrix::Zero(2, 2);
  shift(0, 1) = 1.0;
  CHECK((matrix_exp(shift, 1.0) - (Matrix::Identity(2, 2) + shift)).norm() <=
        1e-14);
}

TEST_CASE("matrix_exp satisfies the semigroup property") {
  Rng rng(11);
  const Matrix a = rng.gaussian_matrix(6, 6);
  const Matrix whole = matrix_exp(a, 0.9);
  const Matrix split = matrix_exp(a, 0.4) * matrix_exp(a, 0.5);
  CHECK((whole - split).norm() / whole.norm() <= 1e-9);
}

TEST_CASE("matrix_exp agrees with the eigendecomposition on Hermitian input") {
  Rng rng(3);
  const Matrix a = rng.hermitian(8);
  auto eig = hermitian_eig(a);
  Matrix expected = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    expected += std::exp(0.63 * eig.values(i)) * eig.vectors.col(i) *
                eig.vectors.col(i).adjoint();
  }
  CHECK((matrix_exp(a, 0.63) - expected).norm() <= 1e-11 * expected.norm());
}

TEST_CASE("null_space dimensions") {
  CHECK(null_space(Matrix::Zero(5, 5)).dim() == 5);
  CHECK(null_space(Matrix::Identity(4, 4)).dim() == 0);

  // Rank-1 projector on C^3: kernel has dim 2.
  Vector v(3);
  v << 1.0, Complex(0, 1), 0.5;
  v.normalize();
  const SubspaceBasis kernel = null_space(Matrix(v * v.adjoint()));
  CHECK(kernel.dim() == 2);
  CHECK((kernel.vectors.adjoint() * v).norm() <= 1e-12);
  CHECK(kernel.gram_defect() <= 1e-12);
}

TEST_CASE("null_space plus rank reconstructs the column count") {
  Rng rng(21);
  Matrix a = rng.gaussian_matrix(7, 5);
  a.col(4) = a.col(0) + a.col(1);  // force rank 4
  CHECK(numeric_rank(a) == 4);
  CHECK(null_space(a).dim() + numeric_rank(a) == 5);
}

TEST_CASE("subspace_equal and principal angles") {
  const Index d = 4;
  Matrix e01(d, 2);
  e01.setZero();
  e01(0, 0) = 1.0;
  e01(1, 1) = 1.0;
  const SubspaceBasis s01{d, e01};

  SUBCASE("identical bases") {
    double angle = -1.0;
    CHECK(subspace_equal(s01, s01, 1e-7, &angle));
    CHECK(angle <= 1e-12);
  }
  SUBCASE("rotated basis spans the same space") {
    Matrix rotated(d, 2);
    rotated.setZero();
    rotated(0, 0) = 1.0 / std::sqrt(2.0);
    rotated(1, 0) = 1.0 / std::sqrt(2.0);
    rotated(0, 1) = 1.0 / std::sqrt(2.0);
    rotated(1, 1) = -1.0 / std::sqrt(2.0);
    CHECK(subspace_equal(s01, {d, rotated}));
  }
  SUBCASE("orthogonal lines differ by a right angle") {
    Matrix e0(d, 1), e1(d, 1);
    e0.setZero();
    e1.setZero();
    e0(0, 0) = 1.0;
    e1(1, 0) = 1.0;
    double angle = 0.0;
    CHECK_FALSE(subspace_equal({d, e0}, {d, e1}, 1e-7, &angle));
    CHECK(angle == doctest::Approx(std::acos(0.0)));
  }
  SUBCASE("ambient mismatch is an error") {
    CHECK_THROWS_AS(subspace_equal(s01, SubspaceBasis::empty(5)),
                    AmbientMismatch);
  }
}

TEST_CASE("complement and relative complement") {
  Rng rng(5);
  const SubspaceBasis s = orthonormalize(6, rng.gaussian_matrix(6, 2));
  const SubspaceBasis perp = complement(s);
  CHECK(perp.dim() == 4);
  CHECK((perp.vectors.adjoint() * s.vectors).norm() <= 1e-12);

  const SubspaceBasis whole = join({s, perp});
  CHECK(whole.dim() == 6);

  const SubspaceBasis back = relative_complement(whole, perp);
  CHECK(subspace_equal(back, s, 1e-9));
}

TEST_CASE("psd_range extracts the support") {
  Rng rng(9);
  Matrix g = rng.gaussian_matrix(5, 2);
  Matrix psd = g * g.adjoint();
  const SubspaceBasis range = psd_range(psd);
  CHECK(range.dim() == 2);
  CHECK((psd * range.vectors - range.vectors * (range.vectors.adjoint() * psd *
                                                range.vectors))
            .norm() <= 1e-10 * psd.norm());
}

TEST_CASE("trace_norm of a Hermitian matrix sums absolute eigenvalues") {
  Matrix diag = Matrix::Zero(3, 3);
  diag(0, 0) = 2.0;
  diag(1, 1) = -0.5;
  diag(2, 2) = 0.25;
  CHECK(trace_norm(diag) == doctest::Approx(2.75));
}
