#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "polyjac/errors.hpp"

namespace polyjac {

/// Dense real column vector. Entry-validating constructors reject
/// non-finite values; arithmetic results are not re-validated.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len) : entries_(len, 0.0) {}
  Vector(std::initializer_list<double> init);
  explicit Vector(std::vector<double> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }

  const std::vector<double>& entries() const { return entries_; }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(double k);

 private:
  std::vector<double> entries_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(double k, Vector v);

enum class NormKind { one, two, inf };

double norm(const Vector& v, NormKind kind = NormKind::inf);

/// Dense real matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double k);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(double k, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Matrix transpose(const Matrix& a);
double trace(const Matrix& a);

/// Maximum absolute column sum.
double one_norm(const Matrix& a);
/// Maximum absolute row sum.
double inf_norm(const Matrix& a);
double max_abs(const Matrix& a);

/// Packed LU factorization with partial pivoting. L is unit lower
/// triangular below the diagonal of `factors`, U on and above it.
/// pivots[k] is the row exchanged with row k at step k.
struct LuFactors {
  Matrix factors;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

/// Throws SingularMatrix when a pivot magnitude falls below
/// 1e-14 times the largest row sum of the input.
LuFactors lu_factor(const Matrix& a);

Vector lu_solve(const LuFactors& f, const Vector& y);
Matrix lu_inverse(const LuFactors& f);
double lu_determinant(const LuFactors& f);

/// All eigenvalues of a small dense matrix (order <= 64), by balancing,
/// elimination to Hessenberg form and shifted double-step QR sweeps.
/// Throws NoConvergence when the total sweep count exceeds 100 x order.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Exact 1-norm condition number kappa_1 = |A|_1 * |A^-1|_1 with the
/// inverse formed explicitly through the LU factorization.
double condition_estimate(const Matrix& a);

}  // namespace polyjac
