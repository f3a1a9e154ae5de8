#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "polyjac/linalg.hpp"

namespace polyjac {

/// One homogeneous polynomial term of an n-dimensional system.
///
/// pointwise_product:  N(u) = (P u) o (R u)^os   (order 1 + s)
/// power:              N(u) = A u^ok             (order k)
///
/// where o is the entrywise product and ^o the entrywise power.
class PolyTerm {
 public:
  enum class Kind { pointwise_product, power };

  /// Requires square matrices of equal order and s != -1.
  static PolyTerm pointwise_product(Matrix outer, Matrix inner, double s);

  /// Requires a square coefficient matrix and k != 0.
  static PolyTerm power(Matrix coefficient, double k);

  Kind kind() const { return kind_; }
  std::size_t size() const { return outer_.rows(); }

  /// The raw exponent: s for pointwise_product, k for power.
  double exponent() const { return exponent_; }

  /// Homogeneity order: 1 + s for pointwise_product, k for power.
  double order() const {
    return kind_ == Kind::pointwise_product ? 1.0 + exponent_ : exponent_;
  }

  const Matrix& outer() const;        // pointwise_product only
  const Matrix& inner() const;        // pointwise_product only
  const Matrix& coefficient() const;  // power only

 private:
  PolyTerm(Kind kind, Matrix outer, Matrix inner, double exponent);

  Kind kind_;
  Matrix outer_;  // P, or the power coefficient A
  Matrix inner_;  // R; unused for power terms
  double exponent_;
};

/// N(u) for a single term. Fractional exponents require the entrywise
/// positivity of the inner vector (R u, or u itself for power terms);
/// violations raise DomainError rather than producing NaNs.
Vector eval_term(const PolyTerm& t, const Vector& u);

/// psi(u) = D u + sum_t N_t(u) + b. Immutable after construction apart
/// from a term-evaluation counter used to audit solver behavior.
class PolySystem {
 public:
  PolySystem(Matrix linear, std::vector<PolyTerm> terms, Vector constant);

  PolySystem(const PolySystem& other);
  PolySystem& operator=(const PolySystem& other);
  PolySystem(PolySystem&& other) noexcept;
  PolySystem& operator=(PolySystem&& other) noexcept;
  ~PolySystem() = default;

  std::size_t size() const { return constant_.size(); }
  const Matrix& linear() const { return linear_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  const Vector& constant() const { return constant_; }

  /// psi(u).
  Vector residual(const Vector& u) const;

  /// D u + sum_t order(t) * N_t(u) + b, each nonlinear term weighted by
  /// its homogeneity order.
  Vector scaled_residual(const Vector& u) const;

  /// Number of single-term evaluations performed through this system.
  std::uint64_t term_eval_count() const { return evals_.load(); }
  void reset_term_eval_count() const { evals_.store(0); }

 private:
  Matrix linear_;
  std::vector<PolyTerm> terms_;
  Vector constant_;
  mutable std::atomic<std::uint64_t> evals_{0};
};

}  // namespace polyjac
