#include "gronwall/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "gronwall/bounds.hpp"
#include "gronwall/csv.hpp"
#include "gronwall/detail/util.hpp"
#include "gronwall/expression.hpp"
#include "gronwall/linsys.hpp"
#include "gronwall/oracle.hpp"
#include "gronwall/riccati.hpp"

namespace gronwall {

namespace {

using nlohmann::json;

Grid grid_from_config(const json& config, const CliOptions& opts) {
  const double t0 = config.value("t0", 0.0);
  const double t1 = config.at("t1").get<double>();
  const int n = opts.grid_n_override.value_or(config.at("n").get<int>());
  return Grid(t0, t1, n);
}

Signal signal_from_json(const json& value, const Grid& grid,
                        const std::string& field) {
  if (value.is_number()) return Signal::constant(value.get<double>());
  if (value.is_string())
    return parse_signal_expression(value.get<std::string>());
  if (value.is_array()) {
    auto samples = value.get<std::vector<double>>();
    if (static_cast<int>(samples.size()) != grid.size())
      throw ValidationError("field '" + field + "' has " +
                            std::to_string(samples.size()) +
                            " samples but the grid has " +
                            std::to_string(grid.size()) + " nodes");
    return Signal::from_samples(grid, std::move(samples));
  }
  throw ValidationError("field '" + field +
                        "' must be a number, an expression string, or a sample array");
}

std::string output_path(const json& config, const CliOptions& opts,
                        const std::string& fallback) {
  if (opts.output_override) return *opts.output_override;
  return config.value("output", fallback);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_bound(const json& config, const CliOptions& opts, std::ostream& out) {
  const Grid grid = grid_from_config(config, opts);
  const BoundProblem p{config.at("c").get<double>(),
                       signal_from_json(config.at("v"), grid, "v"),
                       signal_from_json(config.value("f", json(0.0)), grid, "f"),
                       grid};
  const auto classic = classic_bound(p);
  const auto general = general_bound(p);
  std::vector<double> t(grid.size());
  for (int i = 0; i < grid.size(); ++i) t[i] = grid.node(i);
  const std::string path = output_path(config, opts, "bound.csv");
  write_csv(path, {"t", "classic_bound", "general_bound"}, {t, classic, general});
  if (!opts.quiet) out << "wrote " << path << "\n";
  return 0;
}

int run_envelope(const json& config, const CliOptions& opts, std::ostream& out) {
  const Grid grid = grid_from_config(config, opts);
  const Envelope env = two_sided_envelope(
      config.at("u0").get<double>(), signal_from_json(config.at("v"), grid, "v"),
      signal_from_json(config.value("f", json(0.0)), grid, "f"), grid);
  std::vector<double> t(grid.size());
  for (int i = 0; i < grid.size(); ++i) t[i] = grid.node(i);
  const std::string path = output_path(config, opts, "envelope.csv");
  write_csv(path, {"t", "lower", "upper"}, {t, env.lower, env.upper});
  if (!opts.quiet) out << "wrote " << path << "\n";
  return 0;
}

int run_linsys(const json& config, const CliOptions& opts, std::ostream& out) {
  const Grid grid = grid_from_config(config, opts);
  const int dim = config.at("dim").get<int>();
  if (dim < 1) throw ValidationError("field 'dim' must be positive");

  const json& a_rows = config.at("A");
  if (!a_rows.is_array() || static_cast<int>(a_rows.size()) != dim)
    throw ValidationError("field 'A' must be an array of " +
                          std::to_string(dim) + " rows");
  std::vector<Signal> entries;
  entries.reserve(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = a_rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ValidationError("row " + std::to_string(i) + " of 'A' must have " +
                            std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      entries.push_back(signal_from_json(
          row.at(j), grid, "A[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }

  std::vector<Signal> forcing;
  forcing.reserve(dim);
  const json g_field = config.value("g", json::array());
  if (!g_field.empty() && static_cast<int>(g_field.size()) != dim)
    throw ValidationError("field 'g' must have " + std::to_string(dim) + " entries");
  for (int i = 0; i < dim; ++i)
    forcing.push_back(g_field.empty()
                          ? Signal::constant(0.0)
                          : signal_from_json(g_field.at(i), grid,
                                             "g[" + std::to_string(i) + "]"));

  auto y0 = config.at("Y0").get<std::vector<double>>();
  if (static_cast<int>(y0.size()) != dim)
    throw ValidationError("field 'Y0' must have " + std::to_string(dim) + " entries");

  const LinearSystem sys{
      dim,
      [dim, entries](double t) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j)
            m(i, j) = entries[static_cast<size_t>(i) * dim + j](t);
        return m;
      },
      [dim, forcing](double t) {
        std::vector<double> g(dim);
        for (int i = 0; i < dim; ++i) g[i] = forcing[i](t);
        return g;
      },
      std::move(y0), grid};

  const NormEnvelopeReport report = norm_envelope(sys);
  std::vector<double> t(grid.size());
  for (int i = 0; i < grid.size(); ++i) t[i] = grid.node(i);
  const std::string path = output_path(config, opts, "linsys.csv");
  write_csv(path, {"t", "lower", "actual_norm", "upper"},
            {t, report.envelope.lower, report.actual_norm, report.envelope.upper});
  if (!opts.quiet) out << "wrote " << path << "\n";
  out << "contained: " << bool_str(report.contained) << "\n";
  if (!opts.quiet) {
    out << "max_upper_gap: " << format_number(report.max_upper_gap) << "\n";
    out << "max_lower_gap: " << format_number(report.max_lower_gap) << "\n";
    if (report.fallback_count > 0)
      out << "frobenius_fallbacks: " << report.fallback_count << "\n";
  }
  return report.contained ? 0 : 1;
}

int run_riccati_compare(const json& config, const CliOptions& opts,
                        std::ostream& out) {
  const Grid grid = grid_from_config(config, opts);
  const BoundProblem p{config.at("c").get<double>(),
                       signal_from_json(config.at("v"), grid, "v"),
                       signal_from_json(config.value("f", json(0.0)), grid, "f"),
                       grid};
  const double scale = config.value("u_scale", 1.0);
  if (!(scale > 0.0 && scale <= 1.0))
    throw ValidationError("field 'u_scale' must lie in (0, 1]");
  const std::string mode_name = config.value("squared_difference", "as_printed");
  CoeffDifference mode;
  if (mode_name == "as_printed") mode = CoeffDifference::squared;
  else if (mode_name == "linear") mode = CoeffDifference::linear;
  else
    throw ValidationError("field 'squared_difference' must be 'as_printed' or 'linear'");

  Trajectory u_traj = equality_case(p);
  for (double& x : u_traj.values) x *= scale;
  const Signal u = Signal::from_samples(grid, u_traj.values);

  const ComparisonConstruction cons = build_comparison(p, u);
  const ComparisonSetup setup{cons.linear_eq,       cons.riccati_eq,
                              cons.riccati_solution, cons.linear_solution,
                              cons.riccati_solution, cons.riccati_solution.values[0]};
  const HypothesisReport report = check_comparison_criterion(setup, grid, mode);
  const ComparisonVerdict verdict =
      verify_comparison(cons.riccati_solution, cons.linear_solution);

  std::vector<double> t(grid.size());
  for (int i = 0; i < grid.size(); ++i) t[i] = grid.node(i);
  const std::string path = output_path(config, opts, "riccati-compare.csv");
  write_csv(path, {"t", "y", "x"},
            {t, cons.riccati_solution.values, cons.linear_solution.values});
  if (!opts.quiet) out << "wrote " << path << "\n";

  double integral_min = report.integral_curve.empty() ? 0.0 : report.integral_curve[0];
  for (double e : report.integral_curve) integral_min = std::min(integral_min, e);
  out << "f1_nonneg: " << bool_str(report.f1_nonneg) << "\n";
  out << "integral_min: " << format_number(integral_min) << "\n";
  out << "condition_holds: " << bool_str(report.condition_holds) << "\n";
  out << "eta1_satisfies: " << bool_str(report.eta1_satisfies) << "\n";
  out << "eta2_satisfies: " << bool_str(report.eta2_satisfies) << "\n";
  out << "comparison_holds: " << bool_str(verdict.holds) << "\n";
  out << "max_gap: " << format_number(verdict.max_gap) << "\n";
  return (report.condition_holds && verdict.holds) ? 0 : 1;
}

double rel_err(double value, double reference) {
  return std::abs(value - reference) / (1.0 + std::abs(reference));
}

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
};

SuiteResult suite_bound_tightness(std::uint64_t seed) {
  SuiteResult r{"forced-bound tightness", 0, 10};
  const auto problems = generate_instances({seed, r.total, {0.1, 10.0}, 3, 1.0, 2001});
  for (const auto& p : problems) {
    const Trajectory u = equality_case(p);
    const auto b = general_bound(p);
    double worst = 0.0;
    for (int i = 0; i < p.grid.size(); ++i)
      worst = std::max(worst, rel_err(b[i], u.values[i]));
    if (worst <= 1e-4) ++r.passed;
  }
  return r;
}

SuiteResult suite_envelope_containment(std::uint64_t seed) {
  SuiteResult r{"envelope containment", 0, 20};
  const auto problems = generate_instances({seed, r.total, {0.1, 3.0}, 2, 1.0, 8001});
  for (const auto& p : problems) {
    const Trajectory u = equality_case(p);
    const Envelope env = two_sided_envelope(p.c, p.v, p.f, p.grid);
    bool ok = true;
    for (int i = 0; i < p.grid.size() && ok; ++i) {
      const double slack = detail::rel_slack(
          std::max({std::abs(u.values[i]), std::abs(env.lower[i]), std::abs(env.upper[i])}));
      ok = env.lower[i] - slack <= u.values[i] && u.values[i] <= env.upper[i] + slack;
    }
    if (ok) ++r.passed;
  }
  return r;
}

SuiteResult suite_comparison_pipeline(std::uint64_t seed) {
  SuiteResult r{"comparison pipeline", 0, 10};
  const Grid grid(0.0, 1.0, 4001);
  for (int idx = 0; idx < r.total; ++idx) {
    SplitMix64 rng = instance_rng(seed, idx);
    const BoundProblem p = smooth_instance(rng, {0.2, 2.0}, 2, grid);
    Trajectory u_traj = equality_case(p);
    const double s = rng.uniform(0.3, 0.9);
    for (double& x : u_traj.values) x *= s;
    bool ok = true;
    try {
      const ComparisonConstruction cons =
          build_comparison(p, Signal::from_samples(grid, u_traj.values));
      double quad_min = 0.0;
      for (double q : cons.quad_coeff.samples()) quad_min = std::min(quad_min, q);
      ok = quad_min >= -1e-9 &&
           satisfies_riccati_inequality(cons.riccati_eq, cons.riccati_solution) &&
           verify_comparison(cons.riccati_solution, cons.linear_solution).holds;
    } catch (const ValidationError&) {
      ok = false;
    }
    if (ok) ++r.passed;
  }
  return r;
}

SuiteResult suite_linsys_containment(std::uint64_t seed) {
  SuiteResult r{"linear-system containment", 0, 10};
  const Grid grid(0.0, 1.0, 2001);
  for (int idx = 0; idx < r.total; ++idx) {
    SplitMix64 rng = instance_rng(seed + 1, idx);
    const int dim = 2 + static_cast<int>(rng.uniform01() * 3.0);
    const LinearSystem sys = random_linear_system(seed, idx, std::min(dim, 4), grid);
    if (norm_envelope(sys).contained) ++r.passed;
  }
  return r;
}

int run_verify_suite(const json& config, std::ostream& out) {
  const std::uint64_t seed = config.value("seed", std::uint64_t{20250809});
  const SuiteResult results[] = {
      suite_bound_tightness(seed),
      suite_envelope_containment(seed + 1000),
      suite_comparison_pipeline(seed + 2000),
      suite_linsys_containment(seed + 3000),
  };
  bool all = true;
  for (const auto& r : results) {
    out << r.name << ": " << r.passed << "/" << r.total << " passed\n";
    all = all && r.passed == r.total;
  }
  out << "verify-suite: " << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int run_job(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  json config;
  {
    std::ifstream in(opts.config_path);
    if (!in) {
      err << "error: cannot open config file '" << opts.config_path << "'\n";
      return 2;
    }
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    const std::string mode = config.at("mode").get<std::string>();
    if (mode == "bound") return run_bound(config, opts, out);
    if (mode == "envelope") return run_envelope(config, opts, out);
    if (mode == "linsys") return run_linsys(config, opts, out);
    if (mode == "riccati-compare") return run_riccati_compare(config, opts, out);
    if (mode == "verify-suite") return run_verify_suite(config, out);
    err << "error: unknown mode '" << mode << "'\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gronwall
