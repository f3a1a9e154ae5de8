#pragma once

#include "polyjac/linalg.hpp"

namespace polyjac {

/// Entrywise product of equal-shape operands.
Matrix hadamard_product(const Matrix& a, const Matrix& b);
Vector hadamard_product(const Vector& a, const Vector& b);

/// Entrywise power a_ij^q. q = 0 yields the all-ones matrix, q = -1 the
/// entrywise reciprocal. Integer q accepts any base sign (nonzero when
/// q < 0); fractional q requires strictly positive entries.
Matrix hadamard_power(const Matrix& a, double q);
Vector hadamard_power(const Vector& a, double q);

/// Row i of the result is u[i] times row i of a; equals diag(u) * a
/// without forming the diagonal (n*m multiplications).
Matrix row_scale(const Matrix& a, const Vector& u);

/// Column j of the result is v[j] times column j of a; equals a * diag(v).
Matrix col_scale(const Matrix& a, const Vector& v);

}  // namespace polyjac
