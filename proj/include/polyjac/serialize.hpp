#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "polyjac/diagnostics.hpp"
#include "polyjac/polysys.hpp"
#include "polyjac/solvers.hpp"

namespace polyjac {

/// System document:
///   { "n": order,
///     "D": row-major n*n array (optional; absent means zero),
///     "terms": [ { "variant": "pointwise_product",
///                  "outer": [...], "inner": [...], "exponent": s }
///              | { "variant": "power",
///                  "coefficient": [...], "exponent": k } ],
///     "b": length-n array }
/// Round-trips losslessly for finite doubles.
nlohmann::json system_to_json(const PolySystem& sys);
PolySystem system_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const SolveReport& report);

/// CSV with header iter,residual_norm,step_norm,millis, one row per
/// iteration, LF line endings, shortest round-trip doubles.
void report_to_csv(const SolveReport& report, std::ostream& out);

nlohmann::json instance_report_to_json(const InstanceReport& report);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace polyjac
