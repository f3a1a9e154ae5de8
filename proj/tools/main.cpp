#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyjac/diagnostics.hpp"
#include "polyjac/discretize.hpp"
#include "polyjac/euler.hpp"
#include "polyjac/jacobian.hpp"
#include "polyjac/sampling.hpp"
#include "polyjac/serialize.hpp"
#include "polyjac/solvers.hpp"

namespace {

using nlohmann::json;
using namespace polyjac;

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;  // threshold breach or no convergence
constexpr int kExitIo = 2;         // I/O, parse or flag validation failure
constexpr int kExitUnsupported = 3;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open '" + path + "'");
  return json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidSpec("cannot write '" + path + "'");
  out << text;
}

struct BuiltSystem {
  PolySystem system;
  std::optional<Vector> exact;  // manufactured samples, when a bundled problem
  std::string label;
};

// --system wins over --problem; the config file fills whatever flags left
// unset. Bundled problems come with their manufactured samples.
struct SourceOptions {
  std::string problem;
  std::string system_path;
  std::string config_path;
  std::size_t n = 0;  // 0: unset
};

BuiltSystem build_system(const SourceOptions& src, std::size_t default_n) {
  std::string problem = src.problem;
  std::size_t n = src.n;
  std::map<std::string, double> parameters;

  if (!src.config_path.empty()) {
    const json cfg = load_json_file(src.config_path);
    if (cfg.contains("problem")) {
      const json& p = cfg["problem"];
      if (p.contains("name") && problem.empty()) problem = p["name"].get<std::string>();
      if (p.contains("n") && n == 0) n = p["n"].get<std::size_t>();
      if (p.contains("parameters")) {
        for (const auto& [key, value] : p["parameters"].items()) {
          parameters[key] = value.get<double>();
        }
      }
    }
  }

  if (!src.system_path.empty()) {
    PolySystem sys = system_from_json(load_json_file(src.system_path));
    return {std::move(sys), std::nullopt, src.system_path};
  }
  if (problem.empty()) throw InvalidSpec("need --problem, --system or a config file");

  const auto name = parse_problem_name(problem);
  if (!name) throw InvalidSpec("unknown problem '" + problem + "'");
  ProblemSpec spec;
  spec.name = *name;
  spec.n = n == 0 ? default_n : n;
  spec.parameters = std::move(parameters);
  AssembledProblem assembled = assemble(spec);
  return {std::move(assembled.system), std::move(assembled.exact_solution),
          problem_name_string(*name)};
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  SourceOptions src;
  std::vector<double> orders{2.0, 3.0, 1.5};
  std::vector<std::size_t> ns{8};
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string out;
  std::string format = "json";
};

struct VerifyRow {
  double order;
  std::string kind;
  std::size_t n;
  std::size_t trials;
  double max_residual;
};

int run_verify(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<VerifyRow> rows;

  if (!opt.src.system_path.empty()) {
    const PolySystem sys = system_from_json(load_json_file(opt.src.system_path));
    if (sys.terms().empty()) {
      fmt::print("{}: no nonlinear terms, the identity holds vacuously\n",
                 opt.src.system_path);
      return kExitOk;
    }
    std::size_t index = 0;
    for (const PolyTerm& t : sys.terms()) {
      double worst = 0.0;
      for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const Vector u = sample_admissible_point(t, rng);
        worst = std::max(worst, euler_identity_residual(t, u));
      }
      rows.push_back({t.order(), "term[" + std::to_string(index++) + "]", sys.size(),
                      opt.trials, worst});
    }
  } else {
    for (double m : opt.orders) {
      if (m == 0.0) throw InvalidSpec("--orders: order zero is degenerate");
      for (std::size_t n : opt.ns) {
        if (n == 0) throw InvalidSpec("--n: dimensions must be positive");
        double worst_pw = 0.0;
        double worst_pow = 0.0;
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
          if (m != 1.0) {  // s = 0 is linear; skip the degenerate pointwise class
            const PolyTerm t = sample_pointwise_term(m, n, rng);
            const Vector u = sample_admissible_point(t, rng);
            worst_pw = std::max(worst_pw, euler_identity_residual(t, u));
          }
          const PolyTerm t2 = sample_power_term(m, n, rng);
          const Vector u2 = sample_admissible_point(t2, rng);
          worst_pow = std::max(worst_pow, euler_identity_residual(t2, u2));
        }
        if (m != 1.0) rows.push_back({m, "pointwise", n, opt.trials, worst_pw});
        rows.push_back({m, "power", n, opt.trials, worst_pow});
      }
    }
  }

  double overall = 0.0;
  fmt::print("seed: {}\n", opt.seed);
  fmt::print("{:>7} {:>12} {:>5} {:>7} {:>14}\n", "order", "kind", "n", "trials",
             "max_residual");
  for (const VerifyRow& row : rows) {
    overall = std::max(overall, row.max_residual);
    fmt::print("{:>7.3g} {:>12} {:>5} {:>7} {:>14.4e}\n", row.order, row.kind, row.n,
               row.trials, row.max_residual);
  }
  const bool pass = overall <= opt.tol;
  fmt::print("max residual {:.4e} vs threshold {:.2e}: {}\n", overall, opt.tol,
             pass ? "PASS" : "FAIL");

  if (!opt.out.empty()) {
    if (opt.format == "json") {
      json doc;
      doc["seed"] = opt.seed;
      doc["tol"] = opt.tol;
      json classes = json::array();
      for (const VerifyRow& row : rows) {
        classes.push_back({{"order", row.order},
                           {"kind", row.kind},
                           {"n", row.n},
                           {"trials", row.trials},
                           {"max_residual", row.max_residual}});
      }
      doc["classes"] = std::move(classes);
      doc["max_residual"] = overall;
      doc["pass"] = pass;
      write_text_file(opt.out, doc.dump(2) + "\n");
    } else {
      std::string csv = "order,kind,n,trials,max_residual\n";
      for (const VerifyRow& row : rows) {
        csv += format_double(row.order) + "," + row.kind + "," + std::to_string(row.n) + "," +
               std::to_string(row.trials) + "," + format_double(row.max_residual) + "\n";
      }
      write_text_file(opt.out, csv);
    }
  }
  return pass ? kExitOk : kExitThreshold;
}

// ----------------------------------------------------------------- solve

struct SolveOptions {
  SourceOptions src;
  std::string method = "newton";
  std::string inner = "lu";
  double omega = 1.5;
  double tol = 1e-10;
  std::size_t max_iters = 50;
  bool compare = false;
  std::string out;
  std::string format = "csv";
  // flags override config-file values only when actually passed
  bool method_set = false;
  bool inner_set = false;
  bool omega_set = false;
  bool tol_set = false;
  bool max_iters_set = false;
};

SolverConfig solver_config_from(SolveOptions& opt, const PolySystem& sys,
                                const std::optional<Vector>& exact) {
  SolverConfig cfg;
  if (!opt.src.config_path.empty()) {
    const json doc = load_json_file(opt.src.config_path);
    if (doc.contains("solver")) {
      const json& s = doc["solver"];
      if (s.contains("method") && !opt.method_set) opt.method = s["method"].get<std::string>();
      if (s.contains("inner") && !opt.inner_set) opt.inner = s["inner"].get<std::string>();
      if (s.contains("omega") && !opt.omega_set) opt.omega = s["omega"].get<double>();
      if (s.contains("tol_residual") && !opt.tol_set) opt.tol = s["tol_residual"].get<double>();
      if (s.contains("tol_step")) cfg.tol_step = s["tol_step"].get<double>();
      if (s.contains("max_iters") && !opt.max_iters_set) {
        opt.max_iters = s["max_iters"].get<std::size_t>();
      }
      if (s.contains("max_inner")) cfg.max_inner = s["max_inner"].get<std::size_t>();
      if (s.contains("initial_guess")) {
        std::vector<double> guess;
        for (const auto& v : s["initial_guess"]) guess.push_back(v.get<double>());
        cfg.initial_guess = Vector(std::move(guess));
      }
    }
  }
  cfg.tol_residual = opt.tol;
  cfg.max_outer = opt.max_iters;
  cfg.sor_omega = opt.omega;

  if (opt.inner == "lu") cfg.inner = InnerSolver::lu;
  else if (opt.inner == "jacobi") cfg.inner = InnerSolver::jacobi;
  else if (opt.inner == "gs") cfg.inner = InnerSolver::gauss_seidel;
  else if (opt.inner == "sor") cfg.inner = InnerSolver::sor;
  else throw InvalidSpec("unknown inner solver '" + opt.inner + "'");

  if (cfg.initial_guess.empty()) {
    if (exact) {
      // manufactured samples nudged off the root
      Vector guess = *exact;
      for (std::size_t i = 0; i < guess.size(); ++i) guess[i] += 0.01;
      cfg.initial_guess = std::move(guess);
    } else {
      Vector guess(sys.size());
      for (std::size_t i = 0; i < guess.size(); ++i) guess[i] = 1.0;
      cfg.initial_guess = std::move(guess);
    }
  }
  return cfg;
}

SolveResult dispatch_solve(const std::string& method, const PolySystem& sys,
                           const SolverConfig& cfg) {
  if (method == "newton") return newton_solve(sys, cfg);
  if (method == "newton-nofe") return newton_nofe_solve(sys, cfg);
  if (method == "linear-like") return linear_like_solve(sys, cfg);
  throw InvalidSpec("unknown method '" + method + "'");
}

int run_solve(SolveOptions& opt) {
  const BuiltSystem built = build_system(opt.src, 16);
  const SolverConfig cfg = solver_config_from(opt, built.system, built.exact);

  SolveResult result = dispatch_solve(opt.method, built.system, cfg);
  const SolveReport& report = result.report;

  fmt::print("{} / {} on '{}' (n = {})\n", opt.method,
             opt.method == "linear-like" ? opt.inner : "lu", built.label,
             built.system.size());
  fmt::print("{:>5} {:>14} {:>14} {:>10}\n", "iter", "residual_norm", "step_norm", "millis");
  for (std::size_t i = 0; i < report.history.size(); ++i) {
    const IterationRecord& rec = report.history[i];
    fmt::print("{:>5} {:>14.6e} {:>14.6e} {:>10.3f}\n", i + 1, rec.residual_norm,
               rec.step_norm, rec.millis);
  }

  std::vector<double> deviations;
  if (opt.compare) {
    if (opt.method != "newton-nofe") {
      throw InvalidSpec("--compare only applies to --method newton-nofe");
    }
    SolveResult reference = newton_solve(built.system, cfg);
    const std::size_t shared =
        std::min(report.iterates.size(), reference.report.iterates.size());
    fmt::print("\nper-iterate deviation from standard newton:\n");
    double worst = 0.0;
    for (std::size_t k = 0; k < shared; ++k) {
      Vector diff = report.iterates[k];
      diff -= reference.report.iterates[k];
      const double dev = norm(diff, NormKind::inf) /
                         (1.0 + norm(reference.report.iterates[k], NormKind::inf));
      deviations.push_back(dev);
      worst = std::max(worst, dev);
      fmt::print("{:>5} {:>14.6e}\n", k, dev);
    }
    fmt::print("max deviation: {:.6e}\n", worst);
  }

  if (report.converged) {
    fmt::print("converged in {} iterations\n", report.iterations);
  } else {
    fmt::print("FAILED: {}\n", report.failure_reason.value_or("unknown"));
  }

  if (!opt.out.empty()) {
    if (opt.format == "csv") {
      std::ostringstream os;
      report_to_csv(report, os);
      write_text_file(opt.out, os.str());
    } else {
      json doc;
      doc["label"] = built.label;
      doc["n"] = built.system.size();
      doc["method"] = opt.method;
      doc["report"] = report_to_json(report);
      doc["solution"] = json(result.solution.entries());
      if (!deviations.empty()) doc["deviations"] = json(deviations);
      write_text_file(opt.out, doc.dump(2) + "\n");
    }
  }
  return report.converged ? kExitOk : kExitThreshold;
}

// -------------------------------------------------------------- jacobian

struct JacobianOptions {
  SourceOptions src;
  std::string fd = "central";
  std::vector<double> steps{1e-5};
  bool report = false;
  bool raw_estimator = false;
  std::string out;
};

int run_jacobian(const JacobianOptions& opt) {
  for (double h : opt.steps) {
    if (!(h > 0.0) || !(h < 1.0)) throw InvalidSpec("--h values must lie in (0, 1)");
  }
  const BuiltSystem built = build_system(opt.src, 16);
  const PolySystem& sys = built.system;

  Vector point;
  if (built.exact) {
    point = *built.exact;
  } else {
    point = Vector(sys.size());
    for (std::size_t i = 0; i < point.size(); ++i) point[i] = 1.0;
  }

  const Matrix analytic = system_jacobian(sys, point);
  const double analytic_scale = inf_norm(analytic);

  FdScheme::Kind kind;
  if (opt.fd == "central") kind = FdScheme::Kind::central;
  else if (opt.fd == "forward") kind = FdScheme::Kind::forward;
  else throw InvalidSpec("unknown finite-difference kind '" + opt.fd + "'");

  fmt::print("analytic Jacobian of '{}' at {} (n = {}), |J|_inf = {:.6e}\n", built.label,
             built.exact ? "manufactured samples" : "all-ones", sys.size(), analytic_scale);
  fmt::print("{:>12} {:>16} {:>16}\n", "h", "fd_deviation", "estimate");

  json sweep = json::array();
  for (double h : opt.steps) {
    const Matrix approx = fd_jacobian(sys, point, {kind, h});
    const double deviation = inf_norm(approx - analytic) / analytic_scale;
    const double estimate =
        jacobian_error_estimate(sys, point, approx, NormKind::two, !opt.raw_estimator);
    fmt::print("{:>12.2e} {:>16.6e} {:>16.6e}\n", h, deviation, estimate);
    sweep.push_back({{"h", h}, {"fd_deviation", deviation}, {"estimate", estimate}});
  }

  json doc;
  doc["label"] = built.label;
  doc["n"] = sys.size();
  doc["fd"] = opt.fd;
  doc["sweep"] = std::move(sweep);

  if (opt.report) {
    const InstanceReport rep = instance_report(sys, point);
    double eig_sum = 0.0;
    for (const auto& ev : rep.eigenvalues) eig_sum += ev.real();
    const double tr = trace(physical_stiffness(sys, point));

    fmt::print("\nstiffness instance analysis:\n");
    fmt::print("  condition_one       {:.6e}\n", rep.condition_one);
    fmt::print("  symmetry deviation  {:.6e}\n", rep.symmetry_deviation);
    fmt::print("  circulant           {}\n", rep.circulant ? "yes" : "no");
    fmt::print("  eigenvalue sum      {:.12e} (trace {:.12e})\n", eig_sum, tr);
    fmt::print("  eigenvalues:\n");
    auto sorted = rep.eigenvalues;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (const auto& ev : sorted) {
      fmt::print("    {:>18.10e} {:+.10e}i\n", ev.real(), ev.imag());
    }
    doc["instance"] = instance_report_to_json(rep);
  }

  if (!opt.out.empty()) write_text_file(opt.out, doc.dump(2) + "\n");
  return kExitOk;
}

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--problem", src.problem,
                  "bundled problem: burgers | fractional | duffing | mixed");
  cmd->add_option("--system", src.system_path, "system JSON file");
  cmd->add_option("--config", src.config_path, "JSON config file (flags override it)");
  cmd->add_option("--n", src.n, "interior grid points for bundled problems");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polynomial nonlinear systems: analytic Jacobians by diagonal scaling,\n"
      "homogeneity identity checks, and Newton variants built on them"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "check N(u) = (1/m) J(u) u on random terms or a system file");
  verify->add_option("--orders", verify_opt.orders, "homogeneity orders")->delimiter(',');
  verify->add_option("--n", verify_opt.ns, "dimensions")->delimiter(',');
  verify->add_option("--trials", verify_opt.trials, "random instances per class");
  verify->add_option("--seed", verify_opt.seed, "RNG seed (printed for reproducibility)");
  verify->add_option("--tol", verify_opt.tol, "pass/fail threshold");
  verify->add_option("--system", verify_opt.src.system_path, "system JSON file");
  verify->add_option("--out", verify_opt.out, "write a report file");
  verify->add_option("--format", verify_opt.format, "report format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "run a root finder and report convergence");
  add_source_options(solve, solve_opt.src);
  solve->add_option("--method", solve_opt.method, "newton | newton-nofe | linear-like")
      ->check(CLI::IsMember({"newton", "newton-nofe", "linear-like"}))
      ->each([&solve_opt](const std::string&) { solve_opt.method_set = true; });
  solve->add_option("--inner", solve_opt.inner, "inner linear solver: lu | jacobi | gs | sor")
      ->check(CLI::IsMember({"lu", "jacobi", "gs", "sor"}))
      ->each([&solve_opt](const std::string&) { solve_opt.inner_set = true; });
  solve->add_option("--omega", solve_opt.omega, "SOR relaxation in (0, 2)")
      ->each([&solve_opt](const std::string&) { solve_opt.omega_set = true; });
  solve->add_option("--tol", solve_opt.tol, "residual tolerance")
      ->each([&solve_opt](const std::string&) { solve_opt.tol_set = true; });
  solve->add_option("--max-iters", solve_opt.max_iters, "outer iteration budget")
      ->each([&solve_opt](const std::string&) { solve_opt.max_iters_set = true; });
  solve->add_flag("--compare", solve_opt.compare,
                  "with newton-nofe: also run newton and print per-iterate deviation");
  solve->add_option("--out", solve_opt.out, "write the convergence report");
  solve->add_option("--format", solve_opt.format, "report format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  JacobianOptions jac_opt;
  CLI::App* jacobian = app.add_subcommand(
      "jacobian", "compare analytic and finite-difference Jacobians, estimate errors");
  jacobian->set_help_flag("--help", "print help");
  add_source_options(jacobian, jac_opt.src);
  jacobian->add_option("--fd", jac_opt.fd, "difference kind: central | forward")
      ->check(CLI::IsMember({"central", "forward"}));
  jacobian->add_option("--h", jac_opt.steps, "finite-difference steps")->delimiter(',');
  jacobian->add_flag("--report", jac_opt.report, "include the stiffness instance analysis");
  jacobian->add_flag("--raw-estimator", jac_opt.raw_estimator,
                     "estimator form without the constant vector");
  jacobian->add_option("--out", jac_opt.out, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (verify->parsed()) return run_verify(verify_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (jacobian->parsed()) return run_jacobian(jac_opt);
  } catch (const UnsupportedSystem& e) {
    fmt::print(stderr, "unsupported system: {}\n", e.what());
    return kExitUnsupported;
  } catch (const InvalidSpec& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIo;
  } catch (const json::exception& e) {
    fmt::print(stderr, "parse error: {}\n", e.what());
    return kExitIo;
  } catch (const Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitIo;
  }
  return kExitOk;
}
