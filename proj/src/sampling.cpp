#include "polyjac/sampling.hpp"

#include <cmath>

#include "polyjac/jacobian.hpp"

namespace polyjac {

namespace {

bool is_integral(double q) { return std::floor(q) == q; }

Matrix random_matrix(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

bool fractional_exponents(const PolyTerm& t) {
  if (t.kind() == PolyTerm::Kind::pointwise_product) {
    const double s = t.exponent();
    return !is_integral(s) || s < 0.0;
  }
  const double k = t.exponent();
  return !is_integral(k) || k < 0.0;
}

bool admissible(const PolyTerm& t, const Vector& u) {
  try {
    (void)eval_term(t, u);
    (void)term_jacobian(t, u);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

PolyTerm sample_pointwise_term(double order, std::size_t n, std::mt19937_64& rng) {
  const double s = order - 1.0;
  Matrix outer = random_matrix(n, rng, -1.0, 1.0);
  const bool positive_inner = !is_integral(s) || s < 0.0;
  Matrix inner = positive_inner ? random_matrix(n, rng, 0.1, 1.0)
                                : random_matrix(n, rng, -1.0, 1.0);
  return PolyTerm::pointwise_product(std::move(outer), std::move(inner), s);
}

PolyTerm sample_power_term(double order, std::size_t n, std::mt19937_64& rng) {
  return PolyTerm::power(random_matrix(n, rng, -1.0, 1.0), order);
}

Vector sample_admissible_point(const PolyTerm& t, std::mt19937_64& rng, std::size_t max_tries) {
  const bool positive = fractional_exponents(t);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Vector u = positive ? random_vector(t.size(), rng, 0.1, 1.0)
                        : random_vector(t.size(), rng, -1.0, 1.0);
    if (admissible(t, u)) return u;
  }
  throw DomainError("sample_admissible_point: no admissible point found");
}

Vector sample_admissible_point(const PolySystem& sys, std::mt19937_64& rng,
                               std::size_t max_tries) {
  bool positive = false;
  for (const PolyTerm& t : sys.terms()) positive = positive || fractional_exponents(t);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Vector u = positive ? random_vector(sys.size(), rng, 0.1, 1.0)
                        : random_vector(sys.size(), rng, -1.0, 1.0);
    bool ok = true;
    for (const PolyTerm& t : sys.terms()) {
      if (!admissible(t, u)) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  throw DomainError("sample_admissible_point: no admissible point found");
}

}  // namespace polyjac
