#pragma once

#include <random>

#include "polyjac/polysys.hpp"

namespace polyjac {

/// Random unit-scaled pointwise-product term of the given homogeneity
/// order (s = order - 1). Fractional orders draw the inner matrix from
/// [0.1, 1] so positive-orthant points stay admissible.
PolyTerm sample_pointwise_term(double order, std::size_t n, std::mt19937_64& rng);

/// Random unit-scaled power term (k = order).
PolyTerm sample_power_term(double order, std::size_t n, std::mt19937_64& rng);

/// Point at which the term evaluates and differentiates cleanly.
/// Positive-orthant sampling for fractional exponents, rejection
/// sampling otherwise. Throws DomainError when max_tries draws fail.
Vector sample_admissible_point(const PolyTerm& t, std::mt19937_64& rng,
                               std::size_t max_tries = 100);

/// Point admissible for every term of the system.
Vector sample_admissible_point(const PolySystem& sys, std::mt19937_64& rng,
                               std::size_t max_tries = 100);

}  // namespace polyjac
