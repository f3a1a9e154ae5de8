#include "polyjac/discretize.hpp"

#include <cmath>
#include <numbers>

namespace polyjac {

namespace {

constexpr double kPi = std::numbers::pi;

double get_parameter(const ProblemSpec& spec, const std::string& key, double fallback) {
  auto it = spec.parameters.find(key);
  return it == spec.parameters.end() ? fallback : it->second;
}

void validate(const ProblemSpec& spec) {
  if (spec.n < 3) throw InvalidSpec("ProblemSpec: need at least 3 interior points");
  for (const auto& [key, value] : spec.parameters) {
    if (key == "viscosity") {
      if (spec.name != ProblemName::burgers_steady) {
        throw InvalidSpec("ProblemSpec: viscosity only applies to burgers_steady");
      }
      if (!(value >= 1e-3 && value <= 10.0)) {
        throw InvalidSpec("ProblemSpec: viscosity must lie in [1e-3, 10]");
      }
    } else {
      throw InvalidSpec("ProblemSpec: unknown parameter '" + key + "'");
    }
  }
}

// First-derivative matrix with second-order one-sided stencils in the
// end rows. Stays linear in the interior unknowns when the boundary
// data is nonzero, unlike the central stencil, and is exact for linear
// and quadratic profiles.
Matrix d1_one_sided(std::size_t n) {
  const double h = 1.0 / static_cast<double>(n + 1);
  Matrix d(n, n);
  d(0, 0) = -3.0 / (2.0 * h);
  d(0, 1) = 4.0 / (2.0 * h);
  d(0, 2) = -1.0 / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d(i, i - 1) = -1.0 / (2.0 * h);
    d(i, i + 1) = 1.0 / (2.0 * h);
  }
  d(n - 1, n - 3) = 1.0 / (2.0 * h);
  d(n - 1, n - 2) = -4.0 / (2.0 * h);
  d(n - 1, n - 1) = 3.0 / (2.0 * h);
  return d;
}

Vector grid_points(std::size_t n) {
  const double h = 1.0 / static_cast<double>(n + 1);
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i + 1) * h;
  return x;
}

}  // namespace

Matrix diff_matrix(std::size_t n, int order) {
  if (n < 3) throw InvalidSpec("diff_matrix: need at least 3 interior points");
  if (order != 1 && order != 2) throw InvalidSpec("diff_matrix: order must be 1 or 2");
  const double h = 1.0 / static_cast<double>(n + 1);
  Matrix d(n, n);
  if (order == 1) {
    const double c = 1.0 / (2.0 * h);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) d(i, i - 1) = -c;
      if (i + 1 < n) d(i, i + 1) = c;
    }
  } else {
    const double c = 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) d(i, i - 1) = c;
      d(i, i) = -2.0 * c;
      if (i + 1 < n) d(i, i + 1) = c;
    }
  }
  return d;
}

AssembledProblem assemble(const ProblemSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const Vector x = grid_points(n);

  switch (spec.name) {
    case ProblemName::burgers_steady: {
      const double nu = get_parameter(spec, "viscosity", 1.0);
      Matrix d = -nu * diff_matrix(n, 2);
      std::vector<PolyTerm> terms;
      terms.push_back(PolyTerm::pointwise_product(Matrix::identity(n), diff_matrix(n, 1), 1.0));
      Vector b(n);
      Vector exact(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = std::sin(kPi * x[i]);
        const double du = kPi * std::cos(kPi * x[i]);
        const double ddu = -kPi * kPi * std::sin(kPi * x[i]);
        exact[i] = u;
        b[i] = -(-nu * ddu + u * du);
      }
      return {PolySystem(std::move(d), std::move(terms), std::move(b)), std::move(exact)};
    }
    case ProblemName::fractional_sqrt: {
      Matrix d = Matrix::identity(n);
      std::vector<PolyTerm> terms;
      terms.push_back(PolyTerm::pointwise_product(Matrix::identity(n), d1_one_sided(n), 0.5));
      Vector b(n);
      Vector exact(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = 1.0 + x[i];
        exact[i] = u;
        b[i] = -(u * 1.0 + u);  // u' == 1, so f = u sqrt(u') + u = 2u
      }
      return {PolySystem(std::move(d), std::move(terms), std::move(b)), std::move(exact)};
    }
    case ProblemName::duffing_cubic: {
      Matrix d = diff_matrix(n, 2);
      std::vector<PolyTerm> terms;
      terms.push_back(PolyTerm::power(-1.0 * Matrix::identity(n), 3.0));
      Vector b(n);
      Vector exact(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = std::sin(kPi * x[i]);
        const double ddu = -kPi * kPi * u;
        exact[i] = u;
        b[i] = -(ddu - u * u * u);
      }
      return {PolySystem(std::move(d), std::move(terms), std::move(b)), std::move(exact)};
    }
    case ProblemName::mixed_quad_cubic: {
      Matrix d = diff_matrix(n, 2);
      std::vector<PolyTerm> terms;
      terms.push_back(PolyTerm::pointwise_product(Matrix::identity(n), diff_matrix(n, 1), 1.0));
      terms.push_back(PolyTerm::power(Matrix::identity(n), 3.0));
      Vector b(n);
      Vector exact(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = x[i] * (1.0 - x[i]);
        const double du = 1.0 - 2.0 * x[i];
        exact[i] = u;
        b[i] = -(-2.0 + u * du + u * u * u);
      }
      return {PolySystem(std::move(d), std::move(terms), std::move(b)), std::move(exact)};
    }
  }
  throw InvalidSpec("ProblemSpec: unknown problem");
}

std::string problem_name_string(ProblemName name) {
  switch (name) {
    case ProblemName::burgers_steady:
      return "burgers_steady";
    case ProblemName::fractional_sqrt:
      return "fractional_sqrt";
    case ProblemName::duffing_cubic:
      return "duffing_cubic";
    case ProblemName::mixed_quad_cubic:
      return "mixed_quad_cubic";
  }
  return "unknown";
}

std::optional<ProblemName> parse_problem_name(const std::string& text) {
  if (text == "burgers" || text == "burgers_steady") return ProblemName::burgers_steady;
  if (text == "fractional" || text == "fractional_sqrt") return ProblemName::fractional_sqrt;
  if (text == "duffing" || text == "duffing_cubic") return ProblemName::duffing_cubic;
  if (text == "mixed" || text == "mixed_quad_cubic") return ProblemName::mixed_quad_cubic;
  return std::nullopt;
}

}  // namespace polyjac
