#include <cmath>
#include <random>

#include "doctest.h"
#include "polyjac/discretize.hpp"
#include "polyjac/euler.hpp"
#include "polyjac/sampling.hpp"
#include "polyjac/solvers.hpp"
#include "test_helpers.hpp"

using namespace polyjac;
using testutil::max_abs_diff;
using testutil::random_vector;

namespace {

double residual_at_exact(ProblemName name, std::size_t n) {
  const AssembledProblem p = assemble({name, n, {}});
  return norm(p.system.residual(p.exact_solution), NormKind::inf);
}

Vector perturbed(const Vector& v, double delta) {
  Vector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += delta;
  return out;
}

}  // namespace

TEST_CASE("diff_matrix reproduces the textbook stencils for n = 3") {
  const double h = 0.25;
  const Matrix d2 = diff_matrix(3, 2);
  CHECK(d2(0, 0) == doctest::Approx(-2.0 / (h * h)));
  CHECK(d2(0, 1) == doctest::Approx(1.0 / (h * h)));
  CHECK(d2(1, 0) == doctest::Approx(1.0 / (h * h)));
  CHECK(d2(1, 2) == doctest::Approx(1.0 / (h * h)));
  CHECK(d2(0, 2) == 0.0);

  const Matrix d1 = diff_matrix(3, 1);
  CHECK(d1(0, 0) == 0.0);
  CHECK(d1(0, 1) == doctest::Approx(1.0 / (2.0 * h)));
  CHECK(d1(1, 0) == doctest::Approx(-1.0 / (2.0 * h)));

  CHECK_THROWS_AS(diff_matrix(2, 2), InvalidSpec);
  CHECK_THROWS_AS(diff_matrix(5, 3), InvalidSpec);
}

TEST_CASE("the second-difference matrix is exact on quadratics") {
  const std::size_t n = 17;
  const double h = 1.0 / static_cast<double>(n + 1);
  Vector samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1) * h;
    samples[i] = x * (1.0 - x);
  }
  const Vector d2u = diff_matrix(n, 2) * samples;
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(d2u[i] + 2.0) <= 1e-10);
}

TEST_CASE("problem validation rejects bad grids and parameters") {
  CHECK_THROWS_AS(assemble({ProblemName::burgers_steady, 2, {}}), InvalidSpec);
  CHECK_THROWS_AS(assemble({ProblemName::burgers_steady, 8, {{"viscosity", 100.0}}}),
                  InvalidSpec);
  CHECK_THROWS_AS(assemble({ProblemName::burgers_steady, 8, {{"mystery", 1.0}}}),
                  InvalidSpec);
  CHECK_THROWS_AS(assemble({ProblemName::duffing_cubic, 8, {{"viscosity", 1.0}}}),
                  InvalidSpec);
}

TEST_CASE("manufactured residuals shrink at second order for the smooth problems") {
  for (ProblemName name : {ProblemName::burgers_steady, ProblemName::duffing_cubic}) {
    // h halves exactly between these grids
    const double r8 = residual_at_exact(name, 7);
    const double r16 = residual_at_exact(name, 15);
    const double r32 = residual_at_exact(name, 31);
    const double slope1 = std::log2(r8 / r16);
    const double slope2 = std::log2(r16 / r32);
    CHECK(slope1 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(slope2 == doctest::Approx(2.0).epsilon(0.2));
  }
}

TEST_CASE("polynomial-exact problems have residuals at rounding level") {
  CHECK(residual_at_exact(ProblemName::fractional_sqrt, 16) <= 1e-10);
  CHECK(residual_at_exact(ProblemName::mixed_quad_cubic, 16) <= 1e-10);
}

TEST_CASE("newton from a perturbed start recovers the samples to grid accuracy") {
  for (ProblemName name :
       {ProblemName::burgers_steady, ProblemName::fractional_sqrt,
        ProblemName::duffing_cubic, ProblemName::mixed_quad_cubic}) {
    const std::size_t n = 16;
    const AssembledProblem p = assemble({name, n, {}});
    SolverConfig cfg;
    cfg.initial_guess = perturbed(p.exact_solution, 0.01);
    const SolveResult result = newton_solve(p.system, cfg);
    REQUIRE(result.report.converged);
    const double h = 1.0 / static_cast<double>(n + 1);
    CHECK(max_abs_diff(result.solution, p.exact_solution) <= 5.0 * h * h);
  }
}

TEST_CASE("newton error follows the discretization order across grids") {
  for (ProblemName name : {ProblemName::burgers_steady, ProblemName::duffing_cubic}) {
    std::vector<double> errs, hs;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
      const AssembledProblem p = assemble({name, n, {}});
      SolverConfig cfg;
      cfg.initial_guess = perturbed(p.exact_solution, 0.01);
      const SolveResult result = newton_solve(p.system, cfg);
      REQUIRE(result.report.converged);
      errs.push_back(max_abs_diff(result.solution, p.exact_solution));
      hs.push_back(1.0 / static_cast<double>(n + 1));
    }
    // least-squares slope of log err against log h
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < errs.size(); ++i) {
      const double x = std::log(hs[i]);
      const double y = std::log(errs[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(errs.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.15));
  }
}

TEST_CASE("the fractional problem stays admissible near its solution") {
  const AssembledProblem p = assemble({ProblemName::fractional_sqrt, 16, {}});
  const PolyTerm& t = p.system.terms().front();
  const Vector du = t.inner() * p.exact_solution;
  for (std::size_t i = 0; i < du.size(); ++i) CHECK(du[i] > 0.0);

  const Vector du_perturbed = t.inner() * perturbed(p.exact_solution, 0.01);
  for (std::size_t i = 0; i < du_perturbed.size(); ++i) CHECK(du_perturbed[i] > 0.0);
}

TEST_CASE("assembled systems satisfy the homogeneity identity at random points") {
  std::mt19937_64 rng(139);
  for (ProblemName name :
       {ProblemName::burgers_steady, ProblemName::fractional_sqrt,
        ProblemName::duffing_cubic, ProblemName::mixed_quad_cubic}) {
    const AssembledProblem p = assemble({name, 8, {}});
    for (int rep = 0; rep < 10; ++rep) {
      Vector u;
      if (name == ProblemName::fractional_sqrt) {
        // stay close to the admissible corridor around the samples
        u = p.exact_solution;
        const Vector noise = random_vector(8, rng, -0.005, 0.005);
        u += noise;
      } else {
        u = random_vector(8, rng);
      }
      for (const PolyTerm& t : p.system.terms()) {
        CHECK(euler_identity_residual(t, u) <= 1e-12);
      }
    }
  }
}

TEST_CASE("problem names parse with aliases") {
  CHECK(parse_problem_name("burgers") == ProblemName::burgers_steady);
  CHECK(parse_problem_name("fractional_sqrt") == ProblemName::fractional_sqrt);
  CHECK(parse_problem_name("duffing") == ProblemName::duffing_cubic);
  CHECK(parse_problem_name("mixed") == ProblemName::mixed_quad_cubic);
  CHECK(!parse_problem_name("unknown").has_value());
  CHECK(problem_name_string(ProblemName::burgers_steady) == "burgers_steady");
}
