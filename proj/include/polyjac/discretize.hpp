#pragma once

#include <map>
#include <optional>
#include <string>

#include "polyjac/polysys.hpp"

namespace polyjac {

/// Bundled one-dimensional model problems on [0, 1], discretized by
/// central differences at n interior points with Dirichlet boundaries.
/// Each has a manufactured solution whose forcing term is derived in
/// closed form and folded into the constant vector.
enum class ProblemName {
  burgers_steady,    // -nu u'' + u u' = f,       u = sin(pi x)
  fractional_sqrt,   // u (u')^(1/2) + u = f,     u = 1 + x
  duffing_cubic,     // u'' - u^3 = f,            u = sin(pi x)
  mixed_quad_cubic,  // u'' + u u' + u^3 = f,     u = x (1 - x)
};

struct ProblemSpec {
  ProblemName name = ProblemName::burgers_steady;
  std::size_t n = 16;  // interior grid points, n >= 3
  std::map<std::string, double> parameters;  // burgers_steady: "viscosity" in [1e-3, 10]
};

/// Finite-difference matrix on the interior of a uniform grid with
/// spacing h = 1/(n+1), homogeneous Dirichlet values folded out.
/// order 1: (1/2h) tridiag(-1, 0, 1); order 2: (1/h^2) tridiag(1, -2, 1).
Matrix diff_matrix(std::size_t n, int order);

struct AssembledProblem {
  PolySystem system;
  Vector exact_solution;  // manufactured solution sampled at interior points
};

AssembledProblem assemble(const ProblemSpec& spec);

std::string problem_name_string(ProblemName name);

/// Accepts the canonical names and the short aliases
/// burgers / fractional / duffing / mixed.
std::optional<ProblemName> parse_problem_name(const std::string& text);

}  // namespace polyjac
