#include "polyjac/hadamard.hpp"

#include <cmath>

namespace polyjac {

namespace {

bool is_integral(double q) { return std::floor(q) == q; }

double checked_pow(double base, double q) {
  if (is_integral(q)) {
    if (q < 0.0 && base == 0.0) {
      throw DomainError("hadamard_power: zero entry with negative exponent");
    }
  } else if (base <= 0.0) {
    throw DomainError("hadamard_power: non-positive entry with fractional exponent");
  }
  return std::pow(base, q);
}

}  // namespace

Matrix hadamard_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hadamard_product: shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

Vector hadamard_product(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("hadamard_product: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Matrix hadamard_power(const Matrix& a, double q) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_pow(a(i, j), q);
  return out;
}

Vector hadamard_power(const Vector& a, double q) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_pow(a[i], q);
  return out;
}

Matrix row_scale(const Matrix& a, const Vector& u) {
  if (u.size() != a.rows()) throw DimensionMismatch("row_scale: vector length must match rows");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double ui = u[i];
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ui * a(i, j);
  }
  return out;
}

Matrix col_scale(const Matrix& a, const Vector& v) {
  if (v.size() != a.cols()) throw DimensionMismatch("col_scale: vector length must match cols");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * v[j];
  return out;
}

}  // namespace polyjac
