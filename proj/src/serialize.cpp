#include "polyjac/serialize.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace polyjac {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) { return json(m.entries()); }

Matrix matrix_from_json(const json& doc, std::size_t n, const char* what) {
  if (!doc.is_array()) throw InvalidSpec(std::string(what) + ": expected an array");
  std::vector<double> entries;
  entries.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number()) throw InvalidSpec(std::string(what) + ": expected numeric entries");
    entries.push_back(v.get<double>());
  }
  if (entries.size() != n * n) {
    throw InvalidSpec(std::string(what) + ": expected " + std::to_string(n * n) + " entries");
  }
  return Matrix(n, n, std::move(entries));
}

Vector vector_from_json(const json& doc, std::size_t n, const char* what) {
  if (!doc.is_array()) throw InvalidSpec(std::string(what) + ": expected an array");
  std::vector<double> entries;
  entries.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number()) throw InvalidSpec(std::string(what) + ": expected numeric entries");
    entries.push_back(v.get<double>());
  }
  if (entries.size() != n) {
    throw InvalidSpec(std::string(what) + ": expected " + std::to_string(n) + " entries");
  }
  return Vector(std::move(entries));
}

}  // namespace

json system_to_json(const PolySystem& sys) {
  json doc;
  doc["n"] = sys.size();
  doc["D"] = matrix_to_json(sys.linear());
  doc["b"] = json(sys.constant().entries());
  json terms = json::array();
  for (const PolyTerm& t : sys.terms()) {
    json entry;
    if (t.kind() == PolyTerm::Kind::pointwise_product) {
      entry["variant"] = "pointwise_product";
      entry["outer"] = matrix_to_json(t.outer());
      entry["inner"] = matrix_to_json(t.inner());
      entry["exponent"] = t.exponent();
    } else {
      entry["variant"] = "power";
      entry["coefficient"] = matrix_to_json(t.coefficient());
      entry["exponent"] = t.exponent();
    }
    terms.push_back(std::move(entry));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

PolySystem system_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidSpec("system: expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InvalidSpec("system: missing positive integer field 'n'");
  }
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw <= 0) throw InvalidSpec("system: 'n' must be positive");
  const std::size_t n = static_cast<std::size_t>(n_raw);

  Matrix d =
      doc.contains("D") && !doc["D"].is_null() ? matrix_from_json(doc["D"], n, "system.D")
                                               : Matrix(n, n);
  if (!doc.contains("b")) throw InvalidSpec("system: missing field 'b'");
  Vector b = vector_from_json(doc["b"], n, "system.b");

  std::vector<PolyTerm> terms;
  if (doc.contains("terms")) {
    if (!doc["terms"].is_array()) throw InvalidSpec("system.terms: expected an array");
    for (const auto& entry : doc["terms"]) {
      if (!entry.is_object() || !entry.contains("variant")) {
        throw InvalidSpec("system.terms: each term needs a 'variant'");
      }
      const std::string variant = entry["variant"].get<std::string>();
      if (!entry.contains("exponent") || !entry["exponent"].is_number()) {
        throw InvalidSpec("system.terms: missing numeric 'exponent'");
      }
      const double exponent = entry["exponent"].get<double>();
      if (variant == "pointwise_product") {
        if (!entry.contains("outer") || !entry.contains("inner")) {
          throw InvalidSpec("system.terms: pointwise_product needs 'outer' and 'inner'");
        }
        terms.push_back(PolyTerm::pointwise_product(
            matrix_from_json(entry["outer"], n, "term.outer"),
            matrix_from_json(entry["inner"], n, "term.inner"), exponent));
      } else if (variant == "power") {
        if (!entry.contains("coefficient")) {
          throw InvalidSpec("system.terms: power needs 'coefficient'");
        }
        terms.push_back(PolyTerm::power(
            matrix_from_json(entry["coefficient"], n, "term.coefficient"), exponent));
      } else {
        throw InvalidSpec("system.terms: unknown variant '" + variant + "'");
      }
    }
  }
  return PolySystem(std::move(d), std::move(terms), std::move(b));
}

json report_to_json(const SolveReport& report) {
  json doc;
  doc["converged"] = report.converged;
  doc["iterations"] = report.iterations;
  doc["failure_reason"] = report.failure_reason ? json(*report.failure_reason) : json(nullptr);
  json history = json::array();
  for (const IterationRecord& rec : report.history) {
    history.push_back({{"residual_norm", rec.residual_norm},
                       {"step_norm", rec.step_norm},
                       {"millis", rec.millis}});
  }
  doc["history"] = std::move(history);
  return doc;
}

void report_to_csv(const SolveReport& report, std::ostream& out) {
  out << "iter,residual_norm,step_norm,millis\n";
  std::size_t iter = 1;
  for (const IterationRecord& rec : report.history) {
    out << iter++ << ',' << format_double(rec.residual_norm) << ','
        << format_double(rec.step_norm) << ',' << format_double(rec.millis) << '\n';
  }
}

json instance_report_to_json(const InstanceReport& report) {
  json eigs = json::array();
  for (const auto& ev : report.eigenvalues) {
    eigs.push_back({{"re", ev.real()}, {"im", ev.imag()}});
  }
  return json{{"eigenvalues", std::move(eigs)},
              {"condition_one", report.condition_one},
              {"symmetry_deviation", report.symmetry_deviation},
              {"circulant", report.circulant}};
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace polyjac
