#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyjac/polysys.hpp"

namespace polyjac {

enum class Method { newton, newton_nofe, linear_like };
enum class InnerSolver { lu, jacobi, gauss_seidel, sor };

struct SolverConfig {
  Method method = Method::newton;
  InnerSolver inner = InnerSolver::lu;
  double sor_omega = 1.5;        // relaxation, (0, 2)
  double tol_residual = 1e-10;   // |psi|_inf at acceptance
  double tol_step = 1e-12;       // |delta|_inf stagnation cutoff
  std::size_t max_outer = 50;
  std::size_t max_inner = 500;   // sweep budget for iterative inner solvers
  Vector initial_guess;
};

struct IterationRecord {
  double residual_norm;  // NaN when the method does not evaluate it
  double step_norm;
  double millis;
};

/// Outcome of one solver run. history has one record per completed
/// iteration; iterates holds the initial guess followed by every
/// accepted iterate. converged implies the final residual norm is at
/// or below tol_residual.
struct SolveReport {
  bool converged = false;
  std::size_t iterations = 0;
  std::vector<IterationRecord> history;
  std::optional<std::string> failure_reason;
  std::vector<Vector> iterates;
};

struct SolveResult {
  Vector solution;
  SolveReport report;
};

/// Standard Newton: c+ = c - J(c)^-1 psi(c).
SolveResult newton_solve(const PolySystem& sys, const SolverConfig& cfg);

/// Newton step rewritten through the homogeneity identity N = (1/m) J_N c
/// so the nonlinear vector is never evaluated inside the loop:
///   c+ = (s/(1+s)) c - (1/(1+s)) J(c)^-1 (s D c + (1+s) b),  s = m - 1.
/// Requires every nonlinear term to share one order m; convergence is
/// monitored by step size, with a single residual evaluation after exit
/// to validate the root. Throws UnsupportedSystem for mixed orders or
/// systems without nonlinear terms.
SolveResult newton_nofe_solve(const PolySystem& sys, const SolverConfig& cfg);

/// Fixed-point iteration on the linear-like form: solve
/// K(u^k) u^(k+1) = -b with K the physical stiffness, using a direct or
/// relaxation (Jacobi / Gauss-Seidel / SOR) inner solver.
SolveResult linear_like_solve(const PolySystem& sys, const SolverConfig& cfg);

}  // namespace polyjac
