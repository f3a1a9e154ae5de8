#include "polyjac/solvers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "polyjac/euler.hpp"
#include "polyjac/jacobian.hpp"

namespace polyjac {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate(const PolySystem& sys, const SolverConfig& cfg) {
  if (cfg.tol_residual <= 0.0 || cfg.tol_step <= 0.0) {
    throw InvalidSpec("solver: tolerances must be positive");
  }
  if (cfg.max_outer == 0) throw InvalidSpec("solver: max_outer must be positive");
  if (cfg.inner == InnerSolver::sor && !(cfg.sor_omega > 0.0 && cfg.sor_omega < 2.0)) {
    throw InvalidSpec("solver: SOR relaxation must lie in (0, 2)");
  }
  if (cfg.initial_guess.size() != sys.size()) {
    throw DimensionMismatch("solver: initial guess length differs from system order");
  }
}

bool finite(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) return false;
  }
  return true;
}

struct InnerFailure : Error {
  using Error::Error;
};

// One relaxation solve of K x = rhs from a zero start. Sweeps until the
// linear residual drops to 1e-12 relative to the right-hand side, the
// budget runs out, or the residual grows for 10 consecutive sweeps.
Vector relaxation_solve(const Matrix& k, const Vector& rhs, InnerSolver kind, double omega,
                        std::size_t max_sweeps) {
  const std::size_t n = k.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(k(i, i)) < 1e-300) {
      throw InnerFailure("inner solver: zero diagonal in stiffness matrix");
    }
  }
  const double tol = 1e-12 * (1.0 + norm(rhs, NormKind::inf));

  Vector x(n);
  double prev_res = std::numeric_limits<double>::infinity();
  std::size_t growth_streak = 0;

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    if (kind == InnerSolver::jacobi) {
      Vector next(n);
      for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) acc -= k(i, j) * x[j];
        }
        next[i] = acc / k(i, i);
      }
      x = next;
    } else {
      const double w = kind == InnerSolver::sor ? omega : 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) acc -= k(i, j) * x[j];
        }
        x[i] = (1.0 - w) * x[i] + w * acc / k(i, i);
      }
    }

    Vector r = k * x;
    r -= rhs;
    const double res = norm(r, NormKind::inf);
    if (!std::isfinite(res)) throw InnerFailure("inner solver: iteration diverged");
    if (res <= tol) return x;
    if (res > prev_res) {
      if (++growth_streak >= 10) {
        throw InnerFailure("inner solver: residual grew for 10 consecutive sweeps");
      }
    } else {
      growth_streak = 0;
    }
    prev_res = res;
  }
  throw InnerFailure("inner solver: sweep budget exhausted");
}

Vector inner_solve(const Matrix& k, const Vector& rhs, const SolverConfig& cfg) {
  if (cfg.inner == InnerSolver::lu) return lu_solve(lu_factor(k), rhs);
  return relaxation_solve(k, rhs, cfg.inner, cfg.sor_omega, cfg.max_inner);
}

SolveResult fail(Vector last, SolveReport report, std::string reason) {
  report.converged = false;
  report.failure_reason = std::move(reason);
  report.iterations = report.history.size();
  return {std::move(last), std::move(report)};
}

}  // namespace

SolveResult newton_solve(const PolySystem& sys, const SolverConfig& cfg) {
  validate(sys, cfg);
  SolveReport report;
  Vector c = cfg.initial_guess;
  report.iterates.push_back(c);

  Vector psi;
  try {
    psi = sys.residual(c);
  } catch (const DomainError& e) {
    return fail(std::move(c), std::move(report), std::string("initial guess inadmissible: ") + e.what());
  }
  double res = norm(psi, NormKind::inf);
  if (!std::isfinite(res)) return fail(std::move(c), std::move(report), "residual is not finite");

  for (std::size_t iter = 0; iter < cfg.max_outer; ++iter) {
    if (res <= cfg.tol_residual) {
      report.converged = true;
      report.iterations = report.history.size();
      return {std::move(c), std::move(report)};
    }
    const auto tick = Clock::now();
    Vector step;
    try {
      step = lu_solve(lu_factor(system_jacobian(sys, c)), psi);
    } catch (const SingularMatrix& e) {
      return fail(std::move(c), std::move(report), std::string("singular Jacobian: ") + e.what());
    } catch (const DomainError& e) {
      return fail(std::move(c), std::move(report), std::string("Jacobian undefined: ") + e.what());
    }
    Vector next = c;
    next -= step;
    try {
      psi = sys.residual(next);
    } catch (const DomainError& e) {
      return fail(std::move(c), std::move(report),
                  std::string("iterate left the admissible region: ") + e.what());
    }
    res = norm(psi, NormKind::inf);
    const double step_norm = norm(step, NormKind::inf);
    report.history.push_back({res, step_norm, elapsed_ms(tick)});
    report.iterates.push_back(next);
    c = std::move(next);
    if (!std::isfinite(res)) return fail(std::move(c), std::move(report), "residual is not finite");
    if (res <= cfg.tol_residual) {
      report.converged = true;
      report.iterations = report.history.size();
      return {std::move(c), std::move(report)};
    }
    if (step_norm <= cfg.tol_step) {
      return fail(std::move(c), std::move(report),
                  "step stagnated below tol_step with residual above tol_residual");
    }
  }
  return fail(std::move(c), std::move(report), "no convergence within max_outer iterations");
}

SolveResult newton_nofe_solve(const PolySystem& sys, const SolverConfig& cfg) {
  validate(sys, cfg);
  if (sys.terms().empty()) {
    throw UnsupportedSystem("newton_nofe: system has no nonlinear terms");
  }
  const double m = sys.terms().front().order();
  for (const PolyTerm& t : sys.terms()) {
    if (t.order() != m) {
      throw UnsupportedSystem("newton_nofe: terms of mixed order are not supported");
    }
  }
  const double s = m - 1.0;

  SolveReport report;
  Vector c = cfg.initial_guess;
  report.iterates.push_back(c);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  bool step_converged = false;
  for (std::size_t iter = 0; iter < cfg.max_outer; ++iter) {
    const auto tick = Clock::now();
    Vector z;
    try {
      Vector rhs = s * (sys.linear() * c);
      rhs += m * sys.constant();
      z = lu_solve(lu_factor(system_jacobian(sys, c)), rhs);
    } catch (const SingularMatrix& e) {
      return fail(std::move(c), std::move(report), std::string("singular Jacobian: ") + e.what());
    } catch (const DomainError& e) {
      return fail(std::move(c), std::move(report), std::string("Jacobian undefined: ") + e.what());
    }
    Vector next = (s / m) * c;
    next -= (1.0 / m) * z;
    if (!finite(next)) return fail(std::move(c), std::move(report), "iterate is not finite");

    Vector delta = next;
    delta -= c;
    const double step_norm = norm(delta, NormKind::inf);
    report.history.push_back({nan, step_norm, elapsed_ms(tick)});
    report.iterates.push_back(next);
    c = std::move(next);
    if (step_norm <= cfg.tol_step) {
      step_converged = true;
      break;
    }
  }

  // single validating residual evaluation, outside the loop
  double res;
  try {
    res = norm(sys.residual(c), NormKind::inf);
  } catch (const DomainError& e) {
    return fail(std::move(c), std::move(report),
                std::string("final iterate left the admissible region: ") + e.what());
  }
  if (!report.history.empty()) report.history.back().residual_norm = res;
  report.iterations = report.history.size();
  if (std::isfinite(res) && res <= cfg.tol_residual) {
    report.converged = true;
    return {std::move(c), std::move(report)};
  }
  return fail(std::move(c), std::move(report),
              step_converged ? "step converged but the validating residual exceeds tol_residual"
                             : "no convergence within max_outer iterations");
}

SolveResult linear_like_solve(const PolySystem& sys, const SolverConfig& cfg) {
  validate(sys, cfg);
  SolveReport report;
  Vector u = cfg.initial_guess;
  report.iterates.push_back(u);

  Vector rhs = -1.0 * sys.constant();
  double res;
  try {
    res = norm(sys.residual(u), NormKind::inf);
  } catch (const DomainError& e) {
    return fail(std::move(u), std::move(report), std::string("initial guess inadmissible: ") + e.what());
  }

  for (std::size_t iter = 0; iter < cfg.max_outer; ++iter) {
    if (res <= cfg.tol_residual) {
      report.converged = true;
      report.iterations = report.history.size();
      return {std::move(u), std::move(report)};
    }
    const auto tick = Clock::now();
    Vector next;
    try {
      next = inner_solve(physical_stiffness(sys, u), rhs, cfg);
    } catch (const SingularMatrix& e) {
      return fail(std::move(u), std::move(report), std::string("singular stiffness matrix: ") + e.what());
    } catch (const InnerFailure& e) {
      return fail(std::move(u), std::move(report), e.what());
    } catch (const DomainError& e) {
      return fail(std::move(u), std::move(report), std::string("stiffness undefined: ") + e.what());
    }
    Vector delta = next;
    delta -= u;
    try {
      res = norm(sys.residual(next), NormKind::inf);
    } catch (const DomainError& e) {
      return fail(std::move(u), std::move(report),
                  std::string("iterate left the admissible region: ") + e.what());
    }
    const double step_norm = norm(delta, NormKind::inf);
    report.history.push_back({res, step_norm, elapsed_ms(tick)});
    report.iterates.push_back(next);
    u = std::move(next);
    if (!std::isfinite(res)) return fail(std::move(u), std::move(report), "residual is not finite");
    if (res <= cfg.tol_residual) {
      report.converged = true;
      report.iterations = report.history.size();
      return {std::move(u), std::move(report)};
    }
    if (step_norm <= cfg.tol_step) {
      return fail(std::move(u), std::move(report),
                  "step stagnated below tol_step with residual above tol_residual");
    }
  }
  return fail(std::move(u), std::move(report), "no convergence within max_outer iterations");
}

}  // namespace polyjac
