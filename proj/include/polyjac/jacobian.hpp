#pragma once

#include "polyjac/polysys.hpp"

namespace polyjac {

/// Finite-difference scheme for approximate Jacobians. Steps are
/// absolute perturbations, sized for unit-scaled problems.
struct FdScheme {
  enum class Kind { forward, central };

  Kind kind = Kind::central;
  double step = 1e-5;

  static FdScheme forward(double h = 1e-6) { return {Kind::forward, h}; }
  static FdScheme central(double h = 1e-5) { return {Kind::central, h}; }
};

/// Analytic Jacobian of a single term, assembled by diagonal row/column
/// scaling:
///   pointwise_product:  diag((Ru)^os) P + s diag((Ru)^o(s-1) o (Pu)) R
///   power:              A diag(k u^o(k-1))
Matrix term_jacobian(const PolyTerm& t, const Vector& u);

/// D plus the sum of all term Jacobians.
Matrix system_jacobian(const PolySystem& sys, const Vector& u);

/// Column j is (psi(u + h e_j) - psi(u)) / h, or the centered variant.
Matrix fd_jacobian(const PolySystem& sys, const Vector& u, const FdScheme& scheme);

/// Row-major flattening of x.
Vector vec_rows(const Matrix& x);

/// Jacobian of phi(X) = X A X with respect to vec_rows(X), for square
/// X and A of equal order n. Entry ((i,j),(p,q)) of the n^2 x n^2
/// result is delta_ip (AX)_qj + (XA)_ip delta_jq, which satisfies
/// J vec_rows(X) = 2 vec_rows(X A X).
Matrix xax_jacobian(const Matrix& x, const Matrix& a);

}  // namespace polyjac
