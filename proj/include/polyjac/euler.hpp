#pragma once

#include "polyjac/polysys.hpp"

namespace polyjac {

/// Normalized magnitude of N(u) - (1/m) J(u) u for a term of order m,
/// i.e. |N - (1/m) J u|_inf / (1 + |N|_inf). Zero in exact arithmetic
/// for every homogeneous polynomial term (Euler's identity).
double euler_identity_residual(const PolyTerm& t, const Vector& u);

/// K(u) = D + sum_t (1/m_t) J_t(u). Satisfies K(u) u + b = psi(u)
/// exactly, which recasts the nonlinear system in the linear-like form
/// K(u) u = -b.
Matrix physical_stiffness(const PolySystem& sys, const Vector& u);

/// D + sum_t J_t(u), the Newton linearization. Identical to
/// system_jacobian; exposed under this name for stiffness comparisons.
Matrix tangent_stiffness(const PolySystem& sys, const Vector& u);

}  // namespace polyjac
