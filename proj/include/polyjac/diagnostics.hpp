#pragma once

#include <complex>
#include <vector>

#include "polyjac/polysys.hpp"

namespace polyjac {

/// Relative deviation of an approximate Jacobian J_hat, measured through
/// the order-weighted residual psibar(u) = D u + sum_t m_t N_t(u) + b:
///
///   err = |psibar(u) - (J_hat u + b)| / |psibar(u)|
///
/// The exact Jacobian scores zero, since J u + b = psibar(u) for
/// homogeneous terms. include_constant=false drops b from the comparison
/// (the raw form, which does not vanish for b != 0).
/// Throws DegenerateNormalization when |psibar(u)| < 1e-300.
double jacobian_error_estimate(const PolySystem& sys, const Vector& u, const Matrix& j_hat,
                               NormKind kind = NormKind::two, bool include_constant = true);

/// Pointwise algebraic snapshot of the physical stiffness K(u).
struct InstanceReport {
  std::vector<std::complex<double>> eigenvalues;
  double condition_one = 0.0;
  double symmetry_deviation = 0.0;  // |K - K^T|_inf / |K|_inf
  bool circulant = false;           // every wrapped diagonal constant to 1e-12
};

InstanceReport instance_report(const PolySystem& sys, const Vector& u);

}  // namespace polyjac
