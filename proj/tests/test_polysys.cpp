#include <cmath>
#include <random>

#include "doctest.h"
#include "polyjac/polysys.hpp"
#include "polyjac/sampling.hpp"
#include "test_helpers.hpp"

using namespace polyjac;
using testutil::max_abs_diff;
using testutil::random_matrix;
using testutil::random_vector;

namespace {

// scalar u + u^2 + u^3 + b
PolySystem scalar_mixed(double b_value) {
  std::vector<PolyTerm> terms;
  terms.push_back(PolyTerm::power(Matrix{{1.0}}, 2.0));
  terms.push_back(PolyTerm::power(Matrix{{1.0}}, 3.0));
  return PolySystem(Matrix{{1.0}}, std::move(terms), Vector{b_value});
}

PolySystem scalar_quadratic() {
  std::vector<PolyTerm> terms;
  terms.push_back(PolyTerm::power(Matrix{{1.0}}, 2.0));
  return PolySystem(Matrix{{0.0}}, std::move(terms), Vector{-4.0});
}

}  // namespace

TEST_CASE("term_order follows the homogeneity degree") {
  const Matrix eye = Matrix::identity(2);
  CHECK(PolyTerm::pointwise_product(eye, eye, 1.0).order() == doctest::Approx(2.0));
  CHECK(PolyTerm::pointwise_product(eye, eye, 0.5).order() == doctest::Approx(1.5));
  CHECK(PolyTerm::power(eye, 3.0).order() == doctest::Approx(3.0));
}

TEST_CASE("degenerate order-zero terms are rejected at construction") {
  const Matrix eye = Matrix::identity(2);
  CHECK_THROWS_AS(PolyTerm::pointwise_product(eye, eye, -1.0), DomainError);
  CHECK_THROWS_AS(PolyTerm::power(eye, 0.0), DomainError);
  CHECK_THROWS_AS(PolyTerm::pointwise_product(eye, Matrix::identity(3), 1.0),
                  DimensionMismatch);
  CHECK_THROWS_AS(PolyTerm::power(Matrix(2, 3), 2.0), DimensionMismatch);
}

TEST_CASE("eval_term on the hand-expanded quadratic example") {
  const PolyTerm t = PolyTerm::pointwise_product(Matrix::identity(2),
                                                 Matrix{{0.0, 1.0}, {1.0, 0.0}}, 1.0);
  const Vector got = eval_term(t, Vector{1.0, 2.0});
  CHECK(got[0] == doctest::Approx(2.0));
  CHECK(got[1] == doctest::Approx(2.0));

  // generic elementwise cross-check: (P u)_i * ((R u)_i)^s
  const Vector pu = t.outer() * Vector{1.0, 2.0};
  const Vector ru = t.inner() * Vector{1.0, 2.0};
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(got[i] == doctest::Approx(pu[i] * std::pow(ru[i], 1.0)));
  }
}

TEST_CASE("eval_term for power terms and the s = 0 collapse") {
  const PolyTerm cube = PolyTerm::power(Matrix::identity(3), 3.0);
  const Vector got = eval_term(cube, Vector{1.0, 2.0, 3.0});
  CHECK(got[0] == doctest::Approx(1.0));
  CHECK(got[1] == doctest::Approx(8.0));
  CHECK(got[2] == doctest::Approx(27.0));

  std::mt19937_64 rng(41);
  const Matrix p = random_matrix(3, 3, rng);
  const Matrix r = random_matrix(3, 3, rng);
  const PolyTerm linearized = PolyTerm::pointwise_product(p, r, 0.0);
  const Vector u = random_vector(3, rng);
  CHECK(max_abs_diff(eval_term(linearized, u), p * u) == 0.0);

  // k = 1 power terms are plain matrix-vector products
  const PolyTerm first_power = PolyTerm::power(p, 1.0);
  CHECK(max_abs_diff(eval_term(first_power, u), p * u) == 0.0);
}

TEST_CASE("eval_term raises DomainError outside fractional domains") {
  const PolyTerm t = PolyTerm::pointwise_product(Matrix::identity(1), Matrix{{1.0}}, 0.5);
  CHECK_THROWS_AS(eval_term(t, Vector{-1.0}), DomainError);
  CHECK_THROWS_AS(eval_term(t, Vector{1.0, 2.0}), DimensionMismatch);

  const PolyTerm frac = PolyTerm::power(Matrix{{1.0}}, 1.5);
  CHECK_THROWS_AS(eval_term(frac, Vector{-2.0}), DomainError);
}

TEST_CASE("residual of the scalar quadratic and mixed systems") {
  const PolySystem quad = scalar_quadratic();
  CHECK(quad.residual(Vector{2.0})[0] == doctest::Approx(0.0));
  CHECK(quad.residual(Vector{1.0})[0] == doctest::Approx(-3.0));

  const PolySystem mixed = scalar_mixed(-14.0);
  CHECK(mixed.residual(Vector{2.0})[0] == doctest::Approx(0.0));  // 2 + 4 + 8 - 14
}

TEST_CASE("scaled residual weights each term by its order") {
  const PolySystem quad = scalar_quadratic();
  CHECK(quad.scaled_residual(Vector{3.0})[0] == doctest::Approx(14.0));  // 2*9 - 4

  const PolySystem mixed = scalar_mixed(-14.0);
  CHECK(mixed.scaled_residual(Vector{2.0})[0] == doctest::Approx(20.0));  // 2 + 8 + 24 - 14

  // no nonlinear terms: scaled and plain residuals coincide
  const PolySystem linear(Matrix{{2.0, 1.0}, {0.0, 1.0}}, {}, Vector{1.0, -1.0});
  std::mt19937_64 rng(43);
  const Vector u = random_vector(2, rng);
  CHECK(max_abs_diff(linear.residual(u), linear.scaled_residual(u)) == 0.0);
}

TEST_CASE("terms are homogeneous of their order") {
  std::mt19937_64 rng(47);
  for (double m : {2.0, 3.0, 1.5}) {
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t n = 1 + rep % 6;
      const PolyTerm t = rep % 2 == 0 ? sample_pointwise_term(m, n, rng)
                                      : sample_power_term(m, n, rng);
      const Vector u = sample_admissible_point(t, rng);
      const double alpha = 0.3 + 1.4 * (rep % 5) / 4.0;
      Vector scaled_u = u;
      scaled_u *= alpha;
      const Vector lhs = eval_term(t, scaled_u);
      Vector rhs = eval_term(t, u);
      rhs *= std::pow(alpha, m);
      double scale = std::max(1.0, norm(rhs, NormKind::inf));
      CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("negative scaling is admissible for integer exponents") {
  std::mt19937_64 rng(53);
  const PolyTerm t = sample_power_term(3.0, 4, rng);
  const Vector u = random_vector(4, rng);
  Vector neg = u;
  neg *= -2.0;
  const Vector lhs = eval_term(t, neg);
  Vector rhs = eval_term(t, u);
  rhs *= -8.0;
  CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, norm(rhs, NormKind::inf)));
}

TEST_CASE("residual is affine in the constant vector") {
  const PolySystem base = scalar_mixed(-14.0);
  const PolySystem shifted = scalar_mixed(-28.0);
  const Vector u{1.7};
  CHECK(shifted.residual(u)[0] - base.residual(u)[0] == doctest::Approx(-14.0));
}

TEST_CASE("the evaluation counter tracks term evaluations") {
  const PolySystem mixed = scalar_mixed(-14.0);
  mixed.reset_term_eval_count();
  CHECK(mixed.term_eval_count() == 0);
  (void)mixed.residual(Vector{1.0});
  CHECK(mixed.term_eval_count() == 2);
  (void)mixed.scaled_residual(Vector{1.0});
  CHECK(mixed.term_eval_count() == 4);
}

TEST_CASE("system construction validates orders") {
  std::vector<PolyTerm> terms;
  terms.push_back(PolyTerm::power(Matrix::identity(3), 2.0));
  CHECK_THROWS_AS(PolySystem(Matrix::identity(2), std::move(terms), Vector{1.0, 2.0}),
                  DimensionMismatch);
}
