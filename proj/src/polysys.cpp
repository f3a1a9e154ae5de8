#include "polyjac/polysys.hpp"

#include <cmath>
#include <utility>

#include "polyjac/hadamard.hpp"

namespace polyjac {

PolyTerm::PolyTerm(Kind kind, Matrix outer, Matrix inner, double exponent)
    : kind_(kind), outer_(std::move(outer)), inner_(std::move(inner)), exponent_(exponent) {}

PolyTerm PolyTerm::pointwise_product(Matrix outer, Matrix inner, double s) {
  if (!outer.square() || !inner.square() || outer.rows() != inner.rows()) {
    throw DimensionMismatch("PolyTerm: matrices must be square and of equal order");
  }
  if (!std::isfinite(s)) throw DomainError("PolyTerm: exponent must be finite");
  if (s == -1.0) throw DomainError("PolyTerm: s = -1 gives a degenerate order-0 term");
  return PolyTerm(Kind::pointwise_product, std::move(outer), std::move(inner), s);
}

PolyTerm PolyTerm::power(Matrix coefficient, double k) {
  if (!coefficient.square()) throw DimensionMismatch("PolyTerm: coefficient must be square");
  if (!std::isfinite(k)) throw DomainError("PolyTerm: exponent must be finite");
  if (k == 0.0) throw DomainError("PolyTerm: k = 0 gives a degenerate order-0 term");
  return PolyTerm(Kind::power, std::move(coefficient), Matrix(), k);
}

const Matrix& PolyTerm::outer() const {
  if (kind_ != Kind::pointwise_product) throw DomainError("PolyTerm: not a pointwise term");
  return outer_;
}

const Matrix& PolyTerm::inner() const {
  if (kind_ != Kind::pointwise_product) throw DomainError("PolyTerm: not a pointwise term");
  return inner_;
}

const Matrix& PolyTerm::coefficient() const {
  if (kind_ != Kind::power) throw DomainError("PolyTerm: not a power term");
  return outer_;
}

Vector eval_term(const PolyTerm& t, const Vector& u) {
  if (u.size() != t.size()) throw DimensionMismatch("eval_term: point length mismatch");
  if (t.kind() == PolyTerm::Kind::pointwise_product) {
    const Vector pu = t.outer() * u;
    if (t.exponent() == 0.0) return pu;
    const Vector ru = t.inner() * u;
    return hadamard_product(pu, hadamard_power(ru, t.exponent()));
  }
  return t.coefficient() * hadamard_power(u, t.exponent());
}

PolySystem::PolySystem(Matrix linear, std::vector<PolyTerm> terms, Vector constant)
    : linear_(std::move(linear)), terms_(std::move(terms)), constant_(std::move(constant)) {
  const std::size_t n = constant_.size();
  if (n == 0) throw DimensionMismatch("PolySystem: empty constant vector");
  if (!linear_.square() || linear_.rows() != n) {
    throw DimensionMismatch("PolySystem: linear part must be n x n");
  }
  for (const PolyTerm& t : terms_) {
    if (t.size() != n) throw DimensionMismatch("PolySystem: term order differs from system order");
  }
}

PolySystem::PolySystem(const PolySystem& other)
    : linear_(other.linear_),
      terms_(other.terms_),
      constant_(other.constant_),
      evals_(other.evals_.load()) {}

PolySystem& PolySystem::operator=(const PolySystem& other) {
  if (this != &other) {
    linear_ = other.linear_;
    terms_ = other.terms_;
    constant_ = other.constant_;
    evals_.store(other.evals_.load());
  }
  return *this;
}

PolySystem::PolySystem(PolySystem&& other) noexcept
    : linear_(std::move(other.linear_)),
      terms_(std::move(other.terms_)),
      constant_(std::move(other.constant_)),
      evals_(other.evals_.load()) {}

PolySystem& PolySystem::operator=(PolySystem&& other) noexcept {
  if (this != &other) {
    linear_ = std::move(other.linear_);
    terms_ = std::move(other.terms_);
    constant_ = std::move(other.constant_);
    evals_.store(other.evals_.load());
  }
  return *this;
}

Vector PolySystem::residual(const Vector& u) const {
  Vector r = linear_ * u;
  for (const PolyTerm& t : terms_) {
    r += eval_term(t, u);
    evals_.fetch_add(1);
  }
  r += constant_;
  return r;
}

Vector PolySystem::scaled_residual(const Vector& u) const {
  Vector r = linear_ * u;
  for (const PolyTerm& t : terms_) {
    r += t.order() * eval_term(t, u);
    evals_.fetch_add(1);
  }
  r += constant_;
  return r;
}

}  // namespace polyjac
