#include "polyjac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

namespace polyjac {

namespace {

void require_finite(const std::vector<double>& entries, const char* what) {
  for (double x : entries) {
    if (!std::isfinite(x)) {
      throw DomainError(std::string(what) + ": entries must be finite");
    }
  }
}

double sign_of(double magnitude, double carrier) {
  return carrier >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

}  // namespace

Vector::Vector(std::initializer_list<double> init) : entries_(init) {
  if (entries_.empty()) throw DimensionMismatch("vector length must be positive");
  require_finite(entries_, "vector");
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatch("vector length must be positive");
  require_finite(entries_, "vector");
}

Vector& Vector::operator+=(const Vector& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("vector add: length mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("vector sub: length mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(double k) {
  for (double& x : entries_) x *= k;
  return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator*(double k, Vector v) { return v *= k; }

double norm(const Vector& v, NormKind kind) {
  double acc = 0.0;
  switch (kind) {
    case NormKind::one:
      for (std::size_t i = 0; i < v.size(); ++i) acc += std::abs(v[i]);
      return acc;
    case NormKind::two:
      for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * v[i];
      return std::sqrt(acc);
    case NormKind::inf:
      for (std::size_t i = 0; i < v.size(); ++i) acc = std::max(acc, std::abs(v[i]));
      return acc;
  }
  return acc;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix: entry count does not match rows x cols");
  }
  require_finite(entries_, "matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("matrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_, "matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::fill(m.entries_.begin(), m.entries_.end(), 1.0);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix add: shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix sub: shape mismatch");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(double k) {
  for (double& x : entries_) x *= k;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(double k, Matrix a) { return a *= k; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matvec: dimensions differ");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double trace(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("trace: matrix must be square");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

double one_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) col += std::abs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs(const Matrix& a) {
  double best = 0.0;
  for (double x : a.entries()) best = std::max(best, std::abs(x));
  return best;
}

LuFactors lu_factor(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("lu_factor: matrix must be square");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1};
  Matrix& lu = f.factors;

  const double pivot_tol = 1e-14 * inf_norm(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu(i, k));
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (best <= pivot_tol) {
      throw SingularMatrix("lu_factor: pivot below singularity threshold at column " +
                           std::to_string(k));
    }
    f.pivots[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      f.sign = -f.sign;
    }
    const double pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu(i, k) / pivot;
      lu(i, k) = m;
      if (m == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
    }
  }
  return f;
}

Vector lu_solve(const LuFactors& f, const Vector& y) {
  const std::size_t n = f.factors.rows();
  if (y.size() != n) throw DimensionMismatch("lu_solve: right-hand side length mismatch");
  Vector x = y;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.pivots[k] != k) std::swap(x[k], x[f.pivots[k]]);
  }
  // forward substitution, unit lower triangle
  for (std::size_t i = 1; i < n; ++i) {
    double acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= f.factors(i, j) * x[j];
    x[i] = acc;
  }
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= f.factors(ii, j) * x[j];
    x[ii] = acc / f.factors(ii, ii);
  }
  return x;
}

Matrix lu_inverse(const LuFactors& f) {
  const std::size_t n = f.factors.rows();
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1.0;
    Vector col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double lu_determinant(const LuFactors& f) {
  double det = f.sign;
  for (std::size_t i = 0; i < f.factors.rows(); ++i) det *= f.factors(i, i);
  return det;
}

namespace {

// Iterative rescaling so row and column norms of each index agree;
// improves eigenvalue accuracy for badly scaled inputs.
void balance_in_place(Matrix& a) {
  const std::size_t n = a.rows();
  const double radix = 2.0;
  const double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double fscale = 1.0;
      const double s = c + r;
      while (c < g) {
        fscale *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        fscale /= radix;
        c /= sqrdx;
      }
      if ((c + r) / fscale < 0.95 * s) {
        done = false;
        const double ginv = 1.0 / fscale;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= ginv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= fscale;
      }
    }
  }
}

// Reduction to upper Hessenberg form by stabilized elimination.
void hessenberg_in_place(Matrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double x = 0.0;
    std::size_t piv = m;
    for (std::size_t j = m; j < n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        piv = j;
      }
    }
    if (piv != m) {
      for (std::size_t j = m - 1; j < n; ++j) std::swap(a(piv, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, piv), a(j, m));
    }
    if (x != 0.0) {
      for (std::size_t i = m + 1; i < n; ++i) {
        double y = a(i, m - 1);
        if (y == 0.0) continue;
        y /= x;
        a(i, m - 1) = y;
        for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
        for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
      }
    }
  }
  // clear the multiplier storage below the subdiagonal
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix. Classic
// deflation-driven sweep structure; the total sweep budget is capped
// by the caller.
void hqr_in_place(Matrix& a, int n, std::vector<double>& wr, std::vector<double>& wi,
                  long sweep_budget) {
  const double eps = std::numeric_limits<double>::epsilon();
  int nn, m, l, k, j, its, i, mmin;
  double z, y, x, w, v, u, t, s, r, q, p, anorm;
  long total_sweeps = 0;

  anorm = 0.0;
  for (i = 0; i < n; ++i)
    for (j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  nn = n - 1;
  t = 0.0;
  p = q = r = 0.0;
  while (nn >= 0) {
    its = 0;
    do {
      for (l = nn; l >= 1; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      if (l < 0) l = 0;
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn] = z;
            wi[nn - 1] = -z;
          }
          nn -= 2;
        } else {
          if (++total_sweeps > sweep_budget) {
            throw NoConvergence("eigenvalues: QR sweep budget exhausted");
          }
          if (its == 10 || its == 20) {
            t += x;
            for (i = 0; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            v = std::abs(p) *
                (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              mmin = nn < k + 3 ? nn : k + 3;
              for (i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("eigenvalues: matrix must be square");
  const std::size_t n = a.rows();
  if (n > 64) throw DomainError("eigenvalues: order limited to 64");

  Matrix work = a;
  balance_in_place(work);
  hessenberg_in_place(work);

  std::vector<double> wr(n, 0.0), wi(n, 0.0);
  hqr_in_place(work, static_cast<int>(n), wr, wi, 100L * static_cast<long>(n));

  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
  return out;
}

double condition_estimate(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("condition_estimate: matrix must be square");
  const LuFactors f = lu_factor(a);
  const Matrix inv = lu_inverse(f);
  return one_norm(a) * one_norm(inv);
}

}  // namespace polyjac
