#include "polyjac/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "polyjac/euler.hpp"

namespace polyjac {

double jacobian_error_estimate(const PolySystem& sys, const Vector& u, const Matrix& j_hat,
                               NormKind kind, bool include_constant) {
  const std::size_t n = sys.size();
  if (!j_hat.square() || j_hat.rows() != n) {
    throw DimensionMismatch("jacobian_error_estimate: J_hat must be n x n");
  }
  if (u.size() != n) throw DimensionMismatch("jacobian_error_estimate: point length mismatch");

  const Vector scaled = sys.scaled_residual(u);
  const double denom = norm(scaled, kind);
  if (denom < 1e-300) {
    throw DegenerateNormalization("jacobian_error_estimate: order-weighted residual is zero");
  }
  Vector predicted = j_hat * u;
  if (include_constant) predicted += sys.constant();
  Vector diff = scaled;
  diff -= predicted;
  return norm(diff, kind) / denom;
}

InstanceReport instance_report(const PolySystem& sys, const Vector& u) {
  const Matrix k = physical_stiffness(sys, u);
  const std::size_t n = k.rows();

  InstanceReport report;
  report.eigenvalues = eigenvalues(k);
  report.condition_one = condition_estimate(k);

  const double scale = inf_norm(k);
  const Matrix skew = k - transpose(k);
  report.symmetry_deviation = scale > 0.0 ? inf_norm(skew) / scale : 0.0;

  const double tol = 1e-12 * std::max(1.0, max_abs(k));
  bool circulant = true;
  for (std::size_t d = 0; d < n && circulant; ++d) {
    const double ref = k(0, d);
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(k(i, (i + d) % n) - ref) > tol) {
        circulant = false;
        break;
      }
    }
  }
  report.circulant = circulant;
  return report;
}

}  // namespace polyjac
