#include "robin/coefficients.hpp"
#include "robin/fd_solver.hpp"
#include "robin/norms.hpp"
#include "robin/radial_oracle.hpp"
#include "robin/regimes.hpp"

#include "run_config.hpp"
#include "schema_data.hpp"
#include "table_writer.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace robin;
using namespace robin::cli;

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNonexistence = 4;
constexpr int kExitIoFailure = 5;

nlohmann::json opt_cell(const std::optional<double>& value) {
  if (!value) return nullptr;
  return *value;
}

template <class T>
nlohmann::json opt_num(const std::optional<T>& value) {
  if (!value) return nullptr;
  return static_cast<double>(*value);
}

void emit(const Table& table, const CommonOptions& options,
          const std::string& command, const nlohmann::json& config) {
  write_output(options.out_path,
               render(table, parse_format(options.format), command, config));
}

// ---------------------------------------------------------------------- //
// classify

int run_classify(const CommonOptions& options, std::string n_text,
                 std::string theta_text, std::string q_text,
                 std::string gamma_text) {
  if (!options.config_path.empty()) {
    const nlohmann::json config = load_config_file(options.config_path);
    expect_keys(config, {"classify"}, "config");
    if (!config.contains("classify")) {
      throw ConfigError("classify config needs a 'classify' section");
    }
    const auto& section = config["classify"];
    expect_keys(section, {"dimension", "theta", "q", "gamma"}, "classify");
    if (n_text.empty() && section.contains("dimension")) {
      n_text = section["dimension"].dump();
    }
    auto pull = [&](const char* key, std::string& slot) {
      if (!slot.empty() || !section.contains(key)) return;
      const auto& v = section[key];
      slot = v.is_string() ? v.get<std::string>() : v.dump();
    };
    pull("theta", theta_text);
    pull("q", q_text);
    pull("gamma", gamma_text);
  }
  if (n_text.empty() || theta_text.empty() || q_text.empty()) {
    throw ConfigError("classify needs --N, --theta and --q (or a config file)");
  }

  const ParsedNumber n_parsed = parse_number(n_text, "N");
  if (!n_parsed.exact || n_parsed.exact->denominator() != 1) {
    throw ConfigError("N must be an integer");
  }
  const int dimension = static_cast<int>(n_parsed.exact->numerator());
  const ParsedNumber theta = parse_number(theta_text, "theta");
  const ParsedNumber q = parse_number(q_text, "q");

  const RegimeReport report = classify(dimension, theta.value, q.value);
  std::optional<ExactRegimeReport> exact;
  if (theta.exact && q.exact) {
    exact = classify<Rational>(dimension, *theta.exact, *q.exact);
  }

  nlohmann::json config{{"command", "classify"},
                        {"dimension", dimension},
                        {"theta", theta_text},
                        {"q", q_text},
                        {"exact_mode", exact.has_value()}};

  Table table;
  table.columns = {"dimension",       "theta",
                   "q",               "regime",
                   "q_lower_nonenergy", "q_lower_energy",
                   "q_bounded",       "q_double_star",
                   "summability_exponent", "p_test",
                   "trace_exponent",  "s",
                   "s_conj"};
  table.rows.push_back({dimension, theta.value, q.value,
                        std::string(regime_name(report.regime)),
                        report.q_lower_nonenergy, report.q_lower_energy,
                        report.q_bounded, opt_cell(report.q_double_star),
                        opt_cell(report.summability_exponent),
                        opt_cell(report.p_test), opt_cell(report.trace_exponent),
                        opt_cell(report.s), opt_cell(report.s_conj)});

  if (exact) {
    nlohmann::json strings;
    strings["q_lower_nonenergy"] = rational_string(exact->q_lower_nonenergy);
    strings["q_lower_energy"] = rational_string(exact->q_lower_energy);
    strings["q_bounded"] = rational_string(exact->q_bounded);
    auto put = [&](const char* key, const std::optional<Rational>& r) {
      if (r) strings[key] = rational_string(*r);
    };
    put("q_double_star", exact->q_double_star);
    put("summability_exponent", exact->summability_exponent);
    put("p_test", exact->p_test);
    put("trace_exponent", exact->trace_exponent);
    put("s", exact->s);
    put("s_conj", exact->s_conj);
    table.meta["exact"] = strings;
  }

  if (!gamma_text.empty()) {
    const ParsedNumber gamma = parse_number(gamma_text, "gamma");
    const SourceSummability summability =
        power_source_summability(dimension, gamma.value);
    table.meta["source"] = {
        {"gamma", gamma.value},
        {"marcinkiewicz_index", std::isinf(summability.marcinkiewicz_index)
                                    ? nlohmann::json("inf")
                                    : nlohmann::json(summability.marcinkiewicz_index)},
        {"lebesgue_supremum", std::isinf(summability.lebesgue_supremum)
                                  ? nlohmann::json("inf")
                                  : nlohmann::json(summability.lebesgue_supremum)}};
    config["gamma"] = gamma_text;
  }

  emit(table, options, "classify", config);
  return kExitOk;
}

// ---------------------------------------------------------------------- //
// oracle

int run_oracle(const CommonOptions& options) {
  if (options.config_path.empty()) {
    throw ConfigError("oracle needs --config");
  }
  const nlohmann::json config = load_config_file(options.config_path);
  expect_keys(config, {"problem", "mesh"}, "config");
  if (!config.contains("problem")) {
    throw ConfigError("oracle config needs a 'problem' section");
  }
  const RadialExampleSpec spec = parse_example_spec(config["problem"]);

  int cells = 512;
  std::optional<double> grading;
  if (config.contains("mesh")) {
    expect_keys(config["mesh"], {"cells", "grading"}, "mesh");
    if (config["mesh"].contains("cells")) {
      cells = config["mesh"]["cells"].get<int>();
    }
    if (config["mesh"].contains("grading")) {
      grading = config["mesh"]["grading"].get<double>();
    }
  }
  if (options.mesh_cells) cells = *options.mesh_cells;
  if (cells < 2) throw ConfigError("oracle mesh needs at least 2 cells");
  const double g = grading ? *grading : (spec.gamma >= 1.0 ? 2.0 : 1.0);

  const RadialClosedForm form = solve_boundary_value(spec);
  if (!form.exists) {
    std::cerr << "robin oracle: no bounded radial solution: boundary load "
              << format_double(form.load) << " >= sup F = 1 at theta = 1; "
              << "below that threshold a unique bounded solution exists\n";
    return kExitNonexistence;
  }

  const std::vector<double> nodes = graded_mesh(spec.radius, cells, g);
  Table table;
  table.columns = {"r", "u", "v"};
  for (double r : nodes) {
    table.rows.push_back(
        {r, u_profile(form, spec, r), v_profile(form, spec, r)});
  }
  table.meta = {{"boundary_value", form.boundary_value},
                {"load", form.load},
                {"exists", true}};

  nlohmann::json config_echo{{"command", "oracle"},
                             {"problem", example_spec_json(spec)},
                             {"mesh", {{"cells", cells}, {"grading", g}}}};
  emit(table, options, "oracle", config_echo);
  return kExitOk;
}

// ---------------------------------------------------------------------- //
// solve

Table solution_table(const ProblemSpec& spec, const SolveReport& report) {
  const CoefficientFamily family(spec.theta);
  const std::vector<double> du = nodal_gradient(report.solution);
  Table table;
  table.columns = {"r", "u", "v", "flux"};
  for (std::size_t i = 0; i < report.solution.size(); ++i) {
    const double r = report.solution.nodes[i];
    const double u = report.solution.values[i];
    double flux =
        -family.b(std::abs(u)) * du[i] * std::pow(r, spec.dimension - 1);
    if (flux == 0.0) flux = 0.0;  // drop the sign of -0
    table.rows.push_back({r, u, report.v_equivalent.values[i], flux});
  }
  table.meta = {{"converged", report.converged},
                {"picard_iterations", report.picard_iterations},
                {"final_update_norm", report.final_update_norm},
                {"truncation_active", report.truncation_active},
                {"weak_residual", report.weak_residual}};
  return table;
}

const char* stall_text(StallDiagnosis diagnosis) {
  switch (diagnosis) {
    case StallDiagnosis::blow_up:
      return "monotone blow-up; the problem may sit in a nonexistence regime";
    case StallDiagnosis::oscillation:
      return "oscillation; try a smaller damping factor";
    case StallDiagnosis::none:
      break;
  }
  return "";
}

int run_solve(const CommonOptions& options) {
  if (options.config_path.empty()) {
    throw ConfigError("solve needs --config");
  }
  const nlohmann::json config = load_config_file(options.config_path);
  expect_keys(config, {"problem", "mesh", "truncation", "iteration"}, "config");
  const ProblemSpec spec = parse_problem_spec(config, options);

  const SolveReport report = picard_solve(spec);
  Table table = solution_table(spec, report);
  nlohmann::json config_echo = problem_spec_json(spec);
  config_echo["command"] = "solve";
  emit(table, options, "solve", config_echo);

  if (!report.converged) {
    std::cerr << "robin solve: no convergence in " << report.picard_iterations
              << " steps (" << stall_text(report.diagnosis) << ")\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- //
// sweep

int run_sweep(const CommonOptions& options) {
  if (options.config_path.empty()) {
    throw ConfigError("sweep needs --config");
  }
  const nlohmann::json config = load_config_file(options.config_path);
  expect_keys(config, {"problem", "mesh", "truncation", "iteration", "sweep"},
              "config");
  if (!config.contains("sweep")) {
    throw ConfigError("sweep config needs a 'sweep' section");
  }
  const auto& section = config["sweep"];
  expect_keys(section, {"parameter", "values"}, "sweep");
  if (!section.contains("parameter") || !section.contains("values")) {
    throw ConfigError("sweep section needs 'parameter' and 'values'");
  }
  const std::string parameter = section["parameter"].get<std::string>();
  const std::vector<double> values = section["values"].get<std::vector<double>>();
  if (values.empty()) throw ConfigError("sweep values must be non-empty");

  const ProblemSpec base = parse_problem_spec(config, options);

  std::vector<SolveReport> reports;
  if (parameter == "truncation") {
    reports = truncation_sweep(base, values);
  } else if (parameter == "amplitude") {
    if (!std::holds_alternative<PowerSource>(base.source)) {
      throw ConfigError("amplitude sweeps need a power source");
    }
    for (double amplitude : values) {
      ProblemSpec spec = base;
      std::get<PowerSource>(spec.source).amplitude = amplitude;
      reports.push_back(picard_solve(spec));
    }
  } else {
    throw ConfigError("unknown sweep parameter '" + parameter +
                      "' (expected 'truncation' or 'amplitude')");
  }

  Table table;
  table.columns = {"value",          "max_abs_u",
                   "u_boundary",     "picard_iterations",
                   "converged",      "truncation_active",
                   "final_update_norm", "weak_residual"};
  bool all_converged = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const SolveReport& report = reports[i];
    all_converged = all_converged && report.converged;
    table.rows.push_back({values[i], report.solution.max_abs(),
                          report.solution.values.back(),
                          report.picard_iterations, report.converged,
                          report.truncation_active, report.final_update_norm,
                          report.weak_residual});
  }

  std::string verdict = "not_applicable";
  if (parameter == "truncation" && reports.size() >= 2) {
    const auto range_of = [&](std::size_t from) {
      double lo = reports[from].solution.max_abs(), hi = lo;
      for (std::size_t i = from; i < reports.size(); ++i) {
        lo = std::min(lo, reports[i].solution.max_abs());
        hi = std::max(hi, reports[i].solution.max_abs());
      }
      return std::pair{lo, hi};
    };
    bool increasing = true;
    for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
      if (!(reports[i].solution.max_abs() < reports[i + 1].solution.max_abs())) {
        increasing = false;
        break;
      }
    }
    const double first = reports.front().solution.max_abs();
    const double last = reports.back().solution.max_abs();
    // stabilized needs agreement across every level past the first, or across
    // all of them; a single surviving comparison is not enough to claim it
    const auto [tail_lo, tail_hi] = range_of(1);
    const auto [all_lo, all_hi] = range_of(0);
    const bool tail_flat = reports.size() >= 3 &&
                           tail_hi - tail_lo <= 1e-6 * std::max(1.0, tail_hi);
    const bool all_flat = all_hi - all_lo <= 1e-6 * std::max(1.0, all_hi);
    if (tail_flat || all_flat) {
      verdict = "stabilized";
    } else if (increasing && first > 0.0 && last / first >= 2.0) {
      verdict = "growth";
    } else {
      verdict = "inconclusive";
    }
  }
  table.meta = {{"parameter", parameter}, {"verdict", verdict}};

  nlohmann::json config_echo = problem_spec_json(base);
  config_echo["command"] = "sweep";
  config_echo["sweep"] = {{"parameter", parameter}, {"values", values}};
  emit(table, options, "sweep", config_echo);

  if (!all_converged) {
    std::cerr << "robin sweep: at least one member did not converge\n";
    return kExitNoConvergence;
  }
  if (verdict == "growth") {
    std::cerr << "robin sweep: max|u_n| grows with the truncation level "
                 "without stabilizing; consistent with a nonexistence regime\n";
    return kExitNonexistence;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- //
// verify

int run_verify(const CommonOptions& options) {
  if (options.config_path.empty()) {
    throw ConfigError("verify needs --config");
  }
  const nlohmann::json config = load_config_file(options.config_path);
  expect_keys(config, {"problem", "mesh", "truncation", "iteration", "verify"},
              "config");
  if (!config.contains("verify")) {
    throw ConfigError("verify config needs a 'verify' section");
  }
  const auto& section = config["verify"];
  if (!section.contains("harness")) {
    throw ConfigError("verify section needs a 'harness'");
  }
  const std::string harness = section["harness"].get<std::string>();

  Table table;
  nlohmann::json config_echo{{"command", "verify"}, {"harness", harness}};
  int exit_code = kExitOk;

  if (harness == "pointwise") {
    expect_keys(section, {"harness", "samples", "p_max", "t_max"}, "verify");
    const long samples =
        section.contains("samples") ? section["samples"].get<long>() : 10000;
    const double p_max =
        section.contains("p_max") ? section["p_max"].get<double>() : 10.0;
    const double t_max =
        section.contains("t_max") ? section["t_max"].get<double>() : 1e6;
    std::mt19937_64 rng(static_cast<std::uint64_t>(options.seed));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    long violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
      const double p = 1.0 + 1e-6 + (p_max - 1.0 - 1e-6) * unit(rng);
      double theta = unit(rng);
      if (theta == 0.0 || i % 20 == 0) theta = 1.0;
      const double pick = unit(rng);
      double t;
      if (pick < 0.05) {
        t = 0.0;
      } else if (pick < 0.5) {
        t = 10.0 * unit(rng);
      } else {
        t = std::pow(t_max, unit(rng));
      }
      const PointwiseBound bound = check_pointwise_inequality(p, theta, t);
      worst = std::min(worst, bound.lhs - bound.rhs);
      if (!bound.holds) ++violations;
    }
    table.columns = {"samples", "violations", "worst_margin"};
    table.rows.push_back({samples, violations, worst});
    config_echo["samples"] = samples;
    config_echo["p_max"] = p_max;
    config_echo["t_max"] = t_max;
    config_echo["seed"] = options.seed;
  } else if (harness == "gamma") {
    expect_keys(section, {"harness", "thetas", "t_max", "samples"}, "verify");
    std::vector<double> thetas{0.3, 0.5, 0.9, 1.0};
    if (section.contains("thetas")) {
      thetas = section["thetas"].get<std::vector<double>>();
    }
    const double t_max =
        section.contains("t_max") ? section["t_max"].get<double>() : 1e8;
    const long samples =
        section.contains("samples") ? section["samples"].get<long>() : 10000;
    table.columns = {"theta", "t_max", "samples", "infimum", "gamma_reference"};
    for (double theta : thetas) {
      const double infimum = gamma_condition_infimum(
          CoefficientFamily(theta), t_max, static_cast<std::size_t>(samples));
      table.rows.push_back({theta, t_max, samples, infimum, 1.0 - theta});
    }
    config_echo["thetas"] = thetas;
    config_echo["t_max"] = t_max;
    config_echo["samples"] = samples;
  } else if (harness == "linfty" || harness == "energy") {
    expect_keys(section, {"harness", "q", "amplitudes", "mesh_cells"}, "verify");
    if (!config.contains("problem")) {
      throw ConfigError("verify '" + harness + "' needs a 'problem' section");
    }
    const RadialExampleSpec base = parse_example_spec(config["problem"]);
    if (!section.contains("q") || !section.contains("amplitudes")) {
      throw ConfigError("verify '" + harness + "' needs 'q' and 'amplitudes'");
    }
    const double q = section["q"].get<double>();
    const std::vector<double> amplitudes =
        section["amplitudes"].get<std::vector<double>>();
    config_echo["problem"] = example_spec_json(base);
    config_echo["q"] = q;
    config_echo["amplitudes"] = amplitudes;
    if (harness == "linfty") {
      const auto rows = estimate_harness_linfty(base, amplitudes, q);
      table.columns = {"amplitude", "exists", "B_of_max_u", "source_lq"};
      for (const auto& row : rows) {
        table.rows.push_back({row.amplitude, row.exists,
                              row.exists ? nlohmann::json(row.B_of_max_u)
                                         : nlohmann::json(nullptr),
                              row.source_lq});
      }
    } else {
      int mesh_cells = section.contains("mesh_cells")
                           ? section["mesh_cells"].get<int>()
                           : 8192;
      if (options.mesh_cells) mesh_cells = *options.mesh_cells;
      const auto result = estimate_harness_energy(base, amplitudes, q, mesh_cells);
      table.columns = {"amplitude", "applicable", "u_norm", "ratio", "h1"};
      for (const auto& row : result.rows) {
        table.rows.push_back({row.amplitude, row.applicable, row.u_norm,
                              row.ratio, row.h1});
      }
      table.meta = {{"norm_exponent", result.norm_exponent}, {"q", result.q}};
      config_echo["mesh_cells"] = mesh_cells;
    }
  } else if (harness == "w1s") {
    expect_keys(section, {"harness", "q", "amplitudes"}, "verify");
    if (!section.contains("q") || !section.contains("amplitudes")) {
      throw ConfigError("verify 'w1s' needs 'q' and 'amplitudes'");
    }
    const double q = section["q"].get<double>();
    const std::vector<double> amplitudes =
        section["amplitudes"].get<std::vector<double>>();
    const ProblemSpec base = parse_problem_spec(config, options);
    const auto result = estimate_harness_w1s(base, amplitudes, q);
    table.columns = {"amplitude", "converged", "w1s_norm", "source_lq"};
    bool all_converged = true;
    for (const auto& row : result.rows) {
      all_converged = all_converged && row.converged;
      table.rows.push_back(
          {row.amplitude, row.converged, row.w1s_norm, row.source_lq});
    }
    table.meta = {{"s", result.s}, {"q", result.q},
                  {"loglog_slope", result.loglog_slope}};
    config_echo["problem"] = problem_spec_json(base);
    config_echo["q"] = q;
    config_echo["amplitudes"] = amplitudes;
    if (!all_converged) exit_code = kExitNoConvergence;
  } else {
    throw ConfigError("unknown harness '" + harness +
                      "' (expected pointwise, gamma, linfty, energy or w1s)");
  }

  emit(table, options, "verify", config_echo);
  if (exit_code == kExitNoConvergence) {
    std::cerr << "robin verify: a sweep member did not converge\n";
  }
  return exit_code;
}

// ---------------------------------------------------------------------- //

void add_common_options(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--config", options.config_path, "JSON problem document");
  cmd->add_option("--out", options.out_path,
                  "output path (written atomically; default stdout)");
  cmd->add_option("--format", options.format, "csv | json | tsv")
      ->check(CLI::IsMember({"csv", "json", "tsv"}));
  cmd->add_option("--mesh", options.mesh_cells, "override mesh cell count");
  cmd->add_option("--trunc", options.truncation, "override truncation level");
  cmd->add_option("--tol", options.tolerance, "override iteration tolerance");
  cmd->add_option("--seed", options.seed, "seed for randomized verifications");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "radial solver and estimate-verification toolkit for the degenerate "
      "Robin problem -div((1+|u|)^-theta grad u) = f on balls"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 2 invalid config, 3 solver non-convergence,\n"
      "4 nonexistence detected, 5 I/O failure.\n"
      "Output columns are documented per subcommand (--help) and in the\n"
      "shipped schema (robin schema).");

  CommonOptions classify_opts, oracle_opts, solve_opts, sweep_opts, verify_opts;
  std::string n_text, theta_text, q_text, gamma_text;

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "regime and exponent report for (N, theta, q)");
  add_common_options(classify_cmd, classify_opts);
  classify_cmd->add_option("--N", n_text, "space dimension (integer >= 3)");
  classify_cmd->add_option("--theta", theta_text,
                           "coefficient exponent in (0,1]; decimals and "
                           "fractions like 1/2 stay exact");
  classify_cmd->add_option("--q", q_text, "data summability exponent, q > 1");
  classify_cmd->add_option("--gamma", gamma_text,
                           "optional power-source exponent; adds the "
                           "Marcinkiewicz index N/gamma to the report");
  classify_cmd->footer(
      "Columns: dimension, theta, q, regime, q_lower_nonenergy,\n"
      "q_lower_energy, q_bounded (= N/2), q_double_star (= qN/(N-2q)),\n"
      "summability_exponent (= q**(1-theta)), p_test, trace_exponent\n"
      "(= p_test+1-theta), s (= N(2-theta)/(N-theta)), s_conj (= theta s/(2-s)).\n"
      "Fields outside the detected regime are empty; meta.exact carries the\n"
      "same values as exact fractions when theta and q were given exactly.");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "closed-form radial solution of the power-source problem");
  add_common_options(oracle_cmd, oracle_opts);
  oracle_cmd->footer(
      "Columns: r (abscissa), u (solution), v (= B(u)).\n"
      "Exits 4 when theta = 1 and the boundary load A R^(1-gamma)/(beta(N-gamma))\n"
      "reaches sup F = 1: no bounded radial solution exists there.");

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "nonlinear finite-difference solve via truncation + Picard");
  add_common_options(solve_cmd, solve_opts);
  solve_cmd->footer(
      "Columns: r (abscissa), u (solution), v (= B(u)),\n"
      "flux (= -b(|u|) u' r^(N-1)).  meta: converged, picard_iterations,\n"
      "final_update_norm, truncation_active, weak_residual.");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "re-solve over truncation levels or source amplitudes");
  add_common_options(sweep_cmd, sweep_opts);
  sweep_cmd->footer(
      "Columns: value (swept parameter), max_abs_u, u_boundary,\n"
      "picard_iterations, converged, truncation_active, final_update_norm,\n"
      "weak_residual.  Truncation sweeps carry meta.verdict: 'stabilized'\n"
      "(levels beyond the first agree to 1e-6 relative), 'growth' (strictly\n"
      "increasing with last/first >= 2; exits 4), else 'inconclusive'.");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "estimate-verification harnesses and randomized checks");
  add_common_options(verify_cmd, verify_opts);
  verify_cmd->footer(
      "Harnesses (verify.harness in the config):\n"
      "  pointwise: samples, violations, worst_margin (seeded by --seed)\n"
      "  gamma:     theta, t_max, samples, infimum, gamma_reference (= 1-theta)\n"
      "  linfty:    amplitude, exists, B_of_max_u, source_lq\n"
      "  energy:    amplitude, applicable, u_norm, ratio, h1\n"
      "  w1s:       amplitude, converged, w1s_norm, source_lq");

  CLI::App* schema_cmd = app.add_subcommand(
      "schema", "print the machine-readable output schema (JSON)");
  std::string schema_out;
  schema_cmd->add_option("--out", schema_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "robin: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (*classify_cmd) {
      return run_classify(classify_opts, n_text, theta_text, q_text, gamma_text);
    }
    if (*oracle_cmd) return run_oracle(oracle_opts);
    if (*solve_cmd) return run_solve(solve_opts);
    if (*sweep_cmd) return run_sweep(sweep_opts);
    if (*verify_cmd) return run_verify(verify_opts);
    if (*schema_cmd) {
      write_output(schema_out, std::string(robin::cli::kOutputSchemaJson));
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "robin: I/O failure: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const ConfigError& e) {
    std::cerr << "robin: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "robin: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "robin: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "robin: invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "robin: solver failure: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}
