#include "lmx/matrix_core.hpp"
#include "lmx/tanh_sinh.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace lmx;
using namespace lmx::testutil;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("spectral summary basics") {
  const auto id2 = spectral_summary(ComplexMatrix::Identity(2, 2));
  CHECK(id2.alpha == doctest::Approx(1.0));
  CHECK(id2.beta == doctest::Approx(1.0));
  CHECK(id2.eigenvalues.size() == 2);
  CHECK(!id2.defective(1e8));

  const auto d = spectral_summary(diag2(1.0, 2.0));
  CHECK(d.alpha == doctest::Approx(2.0));
  CHECK(d.beta == doctest::Approx(1.0));

  const auto nil = spectral_summary(nilpotent2());
  CHECK(nil.alpha == doctest::Approx(0.0));
  CHECK(nil.beta == doctest::Approx(0.0));
  CHECK(nil.defective(1e8));
}

TEST_CASE("positive stability is strict") {
  CHECK(is_positive_stable(diag2(1.0, 2.0)));
  CHECK(!is_positive_stable(diag2(-1.0, 2.0)));
  CHECK(is_positive_stable(ComplexMatrix::Identity(3, 3)));
  CHECK(!is_positive_stable(diag2(0.0, 1.0)));
}

TEST_CASE("scalar_power") {
  std::mt19937_64 rng(7);
  const ComplexMatrix E = random_diagonalizable(3, rng, -1.0, 1.5);
  CHECK(rel_err(scalar_power(1.0, E), ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(rel_err(scalar_power(2.0, ComplexMatrix::Identity(2, 2)), 2.0 * ComplexMatrix::Identity(2, 2)) < 1e-14);
  CHECK(rel_err(scalar_power(4.0, diag2(2.0, 3.0)), diag2(16.0, 64.0)) < 1e-13);

  SUBCASE("group law s^E t^E = (st)^E") {
    for (int k = 0; k < 5; ++k) {
      const ComplexMatrix A = random_diagonalizable(3, rng, -0.5, 1.0);
      const MatrixPower plan(A);
      const double s = 0.3 + 0.4 * k, t = 1.7 - 0.2 * k;
      CHECK(rel_err(plan(s) * plan(t), plan(s * t)) < 1e-9);
    }
  }

  SUBCASE("defective exponent falls back to the exponential") {
    // t^N = exp(N ln t) = I + N ln t for the nilpotent Jordan block
    const ComplexMatrix P = scalar_power(2.0, nilpotent2());
    ComplexMatrix want = ComplexMatrix::Identity(2, 2);
    want(0, 1) = std::log(2.0);
    CHECK(rel_err(P, want) < 1e-14);
    CHECK(MatrixPower(nilpotent2()).uses_exp_fallback());
  }

  CHECK_THROWS_AS(scalar_power(0.0, diag2(1.0, 1.0)), DomainError);
}

TEST_CASE("matrix gamma") {
  CHECK(rel_err(matrix_gamma(ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(2, 2)) < 1e-13);
  CHECK(rel_err(matrix_gamma(2.0 * ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(2, 2)) < 1e-13);
  CHECK(rel_err(matrix_gamma(diag2(0.5, 1.5)), diag2(kSqrtPi, kSqrtPi / 2.0)) < 1e-12);

  CHECK_THROWS_AS(matrix_gamma(diag2(0.0, 1.0)), PoleError);
  CHECK_THROWS_AS(matrix_gamma(diag2(-2.0, 1.0)), PoleError);
  CHECK_THROWS_AS(matrix_gamma(nilpotent2() + diag2(3.0, 3.0)), DefectiveMatrixError);

  SUBCASE("functional calculus consistency on a non-normal matrix") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 5; ++k) {
      const int r = 3;
      std::uniform_real_distribution<double> ur(0.5, 3.0);
      Eigen::VectorXcd d(r);
      for (int i = 0; i < r; ++i) d[i] = Complex(ur(rng), 0.2 * ur(rng));
      std::normal_distribution<double> g;
      ComplexMatrix N(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) N(i, j) = Complex(g(rng), g(rng));
      const ComplexMatrix V = ComplexMatrix::Identity(r, r) + 0.25 * N;
      const ComplexMatrix A = V * d.asDiagonal() * V.inverse();
      Eigen::VectorXcd gd(r);
      for (int i = 0; i < r; ++i) gd[i] = detail::cgamma(d[i]);
      const ComplexMatrix direct = V * gd.asDiagonal() * V.inverse();
      const double cond = spectral_summary(A).eigcond;
      CHECK(rel_err(matrix_gamma(A), direct) < 1e-9 * cond);
    }
  }
}

TEST_CASE("reciprocal gamma via the shift recurrence") {
  CHECK(rel_err(reciprocal_gamma(ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(2, 2)) < 1e-13);
  // eigenvalue at 0 is allowed: 1/Gamma(0) = 0
  CHECK((reciprocal_gamma(diag2(0.0, 1.0)) - diag2(0.0, 1.0)).norm() < 1e-13);
  CHECK(rel_err(reciprocal_gamma(scalar1(0.5)), scalar1(1.0 / kSqrtPi)) < 1e-12);
  // inverse of gamma where both are defined
  const ComplexMatrix A = diag2(Complex(1.3, 0.2), 2.4);
  CHECK(rel_err(reciprocal_gamma(A) * matrix_gamma(A), ComplexMatrix::Identity(2, 2)) < 1e-11);
}

TEST_CASE("pochhammer products") {
  const ComplexMatrix A = nilpotent2() + diag2(0.7, -1.2);
  CHECK(pochhammer(A, 0) == ComplexMatrix::Identity(2, 2));
  CHECK(rel_err(pochhammer(A, 2), A * (A + ComplexMatrix::Identity(2, 2))) == 0.0);
  CHECK(std::abs(pochhammer(scalar1(1.0), 5)(0, 0) - 120.0) < 1e-12);
}

TEST_CASE("pochhammer/gamma identity (A)_n = 1/Gamma(A) * Gamma(A+nI)") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> un(1, 8);
  for (int k = 0; k < 12; ++k) {
    const ComplexMatrix A = random_diagonalizable(3, rng, 0.3, 2.5);
    const int n = un(rng);
    const ComplexMatrix lhs = pochhammer(A, n);
    const ComplexMatrix rhs =
        reciprocal_gamma(A) * matrix_gamma(A + double(n) * ComplexMatrix::Identity(3, 3));
    CHECK(rel_err(rhs, lhs) < 1e-9);
  }
}

TEST_CASE("gamma limit form") {
  // (I)_n = n! I makes the approximant exact
  CHECK(rel_err(gamma_limit_approx(ComplexMatrix::Identity(2, 2), 13),
                ComplexMatrix::Identity(2, 2)) < 1e-13);
  // Gamma(2I) = I, n = 50: error is 1 - 50/51
  CHECK(rel_err(gamma_limit_approx(2.0 * ComplexMatrix::Identity(2, 2), 50),
                ComplexMatrix::Identity(2, 2)) < 0.02);

  SUBCASE("monotone approach to sqrt(pi) at a = 1/2") {
    double prev = 1e300;
    for (long n : {16L, 64L, 256L, 1024L}) {
      const double err = std::abs(gamma_limit_approx(scalar1(0.5), n)(0, 0) - kSqrtPi);
      CHECK(err < prev);
      prev = err;
    }
  }

  SUBCASE("nonincreasing error for random positive stable matrices") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 5; ++k) {
      const ComplexMatrix A = random_diagonalizable(3, rng, 0.4, 2.0);
      const ComplexMatrix G = matrix_gamma(A);
      double prev = 1e300;
      for (long n : {16L, 64L, 256L, 1024L}) {
        const double err = (gamma_limit_approx(A, n) - G).norm();
        CHECK(err <= 1.1 * prev);  // 10% jitter allowance
        prev = err;
      }
    }
  }

  CHECK_THROWS_AS(gamma_limit_approx(diag2(-3.0, 1.0), 5), SingularPochhammerError);
}

TEST_CASE("beta matrix function") {
  const ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  CHECK(rel_err(beta_matrix(I2, I2), I2) < 1e-12);
  CHECK(rel_err(beta_matrix(I2, 2.0 * I2), 0.5 * I2) < 1e-12);
  CHECK(rel_err(beta_matrix(diag2(2.0, 3.0), diag2(1.0, 1.0)), diag2(0.5, 1.0 / 3.0)) < 1e-12);
  CHECK_THROWS_AS(beta_matrix(diag2(-1.0, 1.0), I2), InputError);

  SUBCASE("commuting pairs reduce to the gamma product") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 4; ++k) {
      const int r = 2 + (k % 3);
      const auto params = commuting_draw({"A", "B"}, r, rng, {{"A", {0.4, 2.0}}, {"B", {0.4, 2.0}}});
      const ComplexMatrix &A = params.at("A"), &B = params.at("B");
      REQUIRE(commute_residual(A, B) < 1e-10 * A.norm() * B.norm());
      const ComplexMatrix direct = beta_matrix(A, B);
      const ComplexMatrix viagamma = matrix_gamma(A) * matrix_gamma(B) * reciprocal_gamma(A + B);
      CHECK(rel_err(direct, viagamma) < 1e-9);
    }
  }
}

TEST_CASE("commutator residual") {
  CHECK(commute_residual(diag2(1.0, 2.0), diag2(3.0, 4.0)) == 0.0);
  CHECK(commute_residual(ComplexMatrix::Identity(2, 2), nilpotent2()) == 0.0);
  CHECK(commute_residual(nilpotent2(), diag2(1.0, 2.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(commute_residual(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)),
                  InputError);
}

TEST_CASE("tanh-sinh rule sanity") {
  CHECK_THROWS_AS(tanh_sinh_rule(2), InputError);
  // integrates an endpoint-singular beta integrand accurately
  const auto rule = tanh_sinh_rule(7);
  double acc = 0.0;
  for (const auto& n : rule) acc += n.weight * std::pow(n.u, -0.7) * std::pow(n.om, -0.5);
  // B(0.3, 0.5) = Gamma(0.3) Gamma(0.5) / Gamma(0.8)
  const double want = std::tgamma(0.3) * std::tgamma(0.5) / std::tgamma(0.8);
  CHECK(std::abs(acc - want) / want < 1e-12);
}
