#include "polyjac/jacobian.hpp"

#include <cmath>

#include "polyjac/hadamard.hpp"

namespace polyjac {

Matrix term_jacobian(const PolyTerm& t, const Vector& u) {
  if (u.size() != t.size()) throw DimensionMismatch("term_jacobian: point length mismatch");
  if (t.kind() == PolyTerm::Kind::pointwise_product) {
    const double s = t.exponent();
    if (s == 0.0) return t.outer();  // linear collapse, no (Ru)^(-1) to form
    const Vector pu = t.outer() * u;
    const Vector ru = t.inner() * u;
    Matrix j = row_scale(t.outer(), hadamard_power(ru, s));
    j += s * row_scale(t.inner(), hadamard_product(hadamard_power(ru, s - 1.0), pu));
    return j;
  }
  const double k = t.exponent();
  return col_scale(t.coefficient(), k * hadamard_power(u, k - 1.0));
}

Matrix system_jacobian(const PolySystem& sys, const Vector& u) {
  Matrix j = sys.linear();
  for (const PolyTerm& t : sys.terms()) j += term_jacobian(t, u);
  return j;
}

Matrix fd_jacobian(const PolySystem& sys, const Vector& u, const FdScheme& scheme) {
  if (!(scheme.step > 0.0) || !(scheme.step < 1.0)) {
    throw InvalidSpec("fd_jacobian: step must lie in (0, 1)");
  }
  const std::size_t n = sys.size();
  if (u.size() != n) throw DimensionMismatch("fd_jacobian: point length mismatch");

  const double h = scheme.step;
  Matrix j(n, n);
  if (scheme.kind == FdScheme::Kind::forward) {
    const Vector base = sys.residual(u);
    for (std::size_t col = 0; col < n; ++col) {
      Vector up = u;
      up[col] += h;
      const Vector fp = sys.residual(up);
      for (std::size_t row = 0; row < n; ++row) j(row, col) = (fp[row] - base[row]) / h;
    }
  } else {
    for (std::size_t col = 0; col < n; ++col) {
      Vector up = u;
      Vector um = u;
      up[col] += h;
      um[col] -= h;
      const Vector fp = sys.residual(up);
      const Vector fm = sys.residual(um);
      for (std::size_t row = 0; row < n; ++row) j(row, col) = (fp[row] - fm[row]) / (2.0 * h);
    }
  }
  return j;
}

Vector vec_rows(const Matrix& x) {
  return Vector(x.entries());
}

Matrix xax_jacobian(const Matrix& x, const Matrix& a) {
  if (!x.square() || !a.square() || x.rows() != a.rows()) {
    throw DimensionMismatch("xax_jacobian: operands must be square and of equal order");
  }
  const std::size_t n = x.rows();
  const Matrix ax = a * x;
  const Matrix xa = x * a;
  Matrix j(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = 0; jj < n; ++jj) {
      const std::size_t row = i * n + jj;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          double value = 0.0;
          if (p == i) value += ax(q, jj);
          if (q == jj) value += xa(i, p);
          j(row, p * n + q) = value;
        }
      }
    }
  }
  return j;
}

}  // namespace polyjac
