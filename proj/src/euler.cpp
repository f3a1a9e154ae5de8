#include "polyjac/euler.hpp"

#include "polyjac/jacobian.hpp"

namespace polyjac {

double euler_identity_residual(const PolyTerm& t, const Vector& u) {
  const Vector n_val = eval_term(t, u);
  const Vector ju = term_jacobian(t, u) * u;
  const double m = t.order();
  Vector diff = n_val;
  diff -= (1.0 / m) * ju;
  return norm(diff, NormKind::inf) / (1.0 + norm(n_val, NormKind::inf));
}

Matrix physical_stiffness(const PolySystem& sys, const Vector& u) {
  Matrix k = sys.linear();
  for (const PolyTerm& t : sys.terms()) {
    k += (1.0 / t.order()) * term_jacobian(t, u);
  }
  return k;
}

Matrix tangent_stiffness(const PolySystem& sys, const Vector& u) {
  return system_jacobian(sys, u);
}

}  // namespace polyjac
