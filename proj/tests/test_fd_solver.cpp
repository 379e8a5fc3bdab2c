#include <doctest.h>

#include "robin/fd_solver.hpp"
#include "robin/radial_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using robin::picard_solve;
using robin::PowerSource;
using robin::ProblemSpec;
using robin::RadialGridFunction;
using robin::SolveReport;
using robin::TabulatedSource;

namespace {

ProblemSpec base_problem(double theta, double amplitude, double gamma,
                         int cells) {
  ProblemSpec spec;
  spec.dimension = 3;
  spec.radius = 1.0;
  spec.beta = 1.0;
  spec.theta = theta;
  spec.source = PowerSource{amplitude, gamma};
  spec.mesh.cells = cells;
  spec.truncation_level = 1e3;
  return spec;
}

// Robin-Poisson with b == 1 and constant f == A on the ball:
// u(r) = A (R^2 - r^2)/(2N) + A R/(N beta).
double linear_reference(double a, double radius, int dim, double beta, double r) {
  return a * (radius * radius - r * r) / (2.0 * dim) +
         a * radius / (dim * beta);
}

double fit_slope(const std::vector<double>& h, const std::vector<double>& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double max_relative_error_vs_oracle(const SolveReport& report,
                                    const robin::RadialExampleSpec& oracle_spec) {
  const auto form = robin::solve_boundary_value(oracle_spec);
  REQUIRE(form.exists);
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < report.solution.size(); ++i) {
    const double exact =
        robin::u_profile(form, oracle_spec, report.solution.nodes[i]);
    err = std::max(err, std::abs(report.solution.values[i] - exact));
    scale = std::max(scale, std::abs(exact));
  }
  return err / scale;
}

}  // namespace

TEST_SUITE("fd_solver") {

TEST_CASE("mesh nodes") {
  ProblemSpec spec = base_problem(1.0, 1.0, 0.0, 16);
  auto uniform = robin::mesh_nodes(spec);
  CHECK(uniform.size() == 17);
  CHECK(uniform[1] == doctest::Approx(1.0 / 16.0));
  CHECK(uniform.back() == 1.0);
  CHECK(robin::resolved_grading(spec) == 1.0);

  spec.source = PowerSource{1.0, 1.5};  // singular data grades by default
  CHECK(robin::resolved_grading(spec) == 2.0);
  auto graded = robin::mesh_nodes(spec);
  CHECK(graded[1] == doctest::Approx(1.0 / 256.0));

  spec.mesh.grading = 1.0;  // explicit override wins
  CHECK(robin::resolved_grading(spec) == 1.0);
}

TEST_CASE("b == 1 solve matches the Robin-Poisson closed form at second order") {
  std::vector<double> hs, errs;
  for (int cells : {128, 256, 512, 1024}) {
    ProblemSpec spec = base_problem(0.0, 1.0, 0.0, cells);
    const SolveReport report = picard_solve(spec);
    REQUIRE(report.converged);
    double err = 0.0;
    for (std::size_t i = 0; i < report.solution.size(); ++i) {
      const double exact =
          linear_reference(1.0, 1.0, 3, 1.0, report.solution.nodes[i]);
      err = std::max(err, std::abs(report.solution.values[i] - exact));
    }
    hs.push_back(1.0 / cells);
    errs.push_back(err);
  }
  CHECK(errs.back() <= 1e-6);
  // second order, with a slowly settling constant from the axis cell
  CHECK(fit_slope(hs, errs) >= 1.8);
}

TEST_CASE("zero source converges to zero in one step") {
  ProblemSpec spec = base_problem(1.0, 0.0, 1.0, 64);
  const SolveReport report = picard_solve(spec);
  CHECK(report.converged);
  CHECK(report.picard_iterations == 1);
  CHECK(report.solution.max_abs() == 0.0);
  CHECK(report.v_equivalent.max_abs() == 0.0);
  CHECK(report.weak_residual == 0.0);
  CHECK_FALSE(report.truncation_active);
}

TEST_CASE("frozen zero iterate reproduces the b(0) = 1 system") {
  ProblemSpec degenerate = base_problem(0.5, 1.0, 0.0, 64);
  ProblemSpec laplacian = base_problem(0.0, 1.0, 0.0, 64);
  const auto nodes = robin::mesh_nodes(degenerate);
  const RadialGridFunction zero(nodes, std::vector<double>(nodes.size(), 0.0), 3);
  const auto sys_a = robin::assemble_linear_system(degenerate, zero);
  const auto sys_b = robin::assemble_linear_system(laplacian, zero);
  for (std::size_t i = 0; i < sys_a.diag.size(); ++i) {
    CHECK(sys_a.diag[i] == doctest::Approx(sys_b.diag[i]).epsilon(1e-15));
    CHECK(sys_a.lower[i] == doctest::Approx(sys_b.lower[i]).epsilon(1e-15));
    CHECK(sys_a.upper[i] == doctest::Approx(sys_b.upper[i]).epsilon(1e-15));
    CHECK(sys_a.rhs[i] == doctest::Approx(sys_b.rhs[i]).epsilon(1e-15));
  }
}

TEST_CASE("nonlinear solve matches the closed-form oracle") {
  // theta = 1, gamma = 1 (graded mesh)
  {
    ProblemSpec spec = base_problem(1.0, 1.0, 1.0, 1024);
    const SolveReport report = picard_solve(spec);
    REQUIRE(report.converged);
    CHECK_FALSE(report.truncation_active);
    robin::RadialExampleSpec oracle;
    oracle.theta = 1.0;
    oracle.amplitude = 1.0;
    oracle.gamma = 1.0;
    CHECK(max_relative_error_vs_oracle(report, oracle) <= 1e-2);
  }
  // smooth case theta = 1/2, gamma = 0
  {
    ProblemSpec spec = base_problem(0.5, 1.0, 0.0, 1024);
    const SolveReport report = picard_solve(spec);
    REQUIRE(report.converged);
    robin::RadialExampleSpec oracle;
    oracle.theta = 0.5;
    oracle.amplitude = 1.0;
    oracle.gamma = 0.0;
    CHECK(max_relative_error_vs_oracle(report, oracle) <= 1e-3);
  }
}

TEST_CASE("mesh convergence against the oracle") {
  // smooth case on uniform meshes
  {
    std::vector<double> hs, errs;
    robin::RadialExampleSpec oracle;
    oracle.theta = 0.5;
    oracle.amplitude = 1.0;
    oracle.gamma = 0.0;
    for (int cells : {64, 128, 256, 512}) {
      ProblemSpec spec = base_problem(0.5, 1.0, 0.0, cells);
      const SolveReport report = picard_solve(spec);
      REQUIRE(report.converged);
      hs.push_back(1.0 / cells);
      errs.push_back(max_relative_error_vs_oracle(report, oracle));
    }
    CHECK(fit_slope(hs, errs) >= 1.8);
  }
  // singular data on graded meshes: at least first order
  {
    std::vector<double> hs, errs;
    robin::RadialExampleSpec oracle;
    oracle.theta = 1.0;
    oracle.amplitude = 1.0;
    oracle.gamma = 1.0;
    for (int cells : {64, 128, 256, 512}) {
      ProblemSpec spec = base_problem(1.0, 1.0, 1.0, cells);
      const SolveReport report = picard_solve(spec);
      REQUIRE(report.converged);
      hs.push_back(1.0 / cells);
      errs.push_back(max_relative_error_vs_oracle(report, oracle));
    }
    CHECK(fit_slope(hs, errs) >= 1.0);
  }
}

TEST_CASE("truncation sweep stabilizes when a bounded solution exists") {
  ProblemSpec spec = base_problem(1.0, 1.0, 1.0, 512);
  const std::vector<double> levels{10.0, 100.0};
  const auto reports = robin::truncation_sweep(spec, levels);
  REQUIRE(reports.size() == 2);
  for (const auto& report : reports) {
    CHECK(report.converged);
    CHECK_FALSE(report.truncation_active);
  }
  CHECK(std::abs(reports[0].solution.max_abs() - reports[1].solution.max_abs()) <=
        1e-8);
}

TEST_CASE("truncation sweep grows without a bounded solution") {
  ProblemSpec spec = base_problem(1.0, 2.0, 1.0, 256);
  spec.iteration.max_steps = 2000;
  const std::vector<double> levels{10.0, 100.0};
  const auto reports = robin::truncation_sweep(spec, levels);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].converged);
  CHECK(reports[1].converged);
  CHECK(reports[0].truncation_active);
  CHECK(reports[1].truncation_active);
  const double first = reports[0].solution.max_abs();
  const double last = reports[1].solution.max_abs();
  CHECK(last > first);
  CHECK(last / first >= 5.0);

  CHECK_THROWS_AS(robin::truncation_sweep(spec, std::vector<double>{10.0, 10.0}),
                  std::invalid_argument);
}

TEST_CASE("truncation sweep of the zero source gives zero at every level") {
  ProblemSpec spec = base_problem(1.0, 0.0, 1.0, 64);
  const std::vector<double> levels{10.0, 100.0, 1000.0};
  for (const auto& report : robin::truncation_sweep(spec, levels)) {
    CHECK(report.converged);
    CHECK(report.solution.max_abs() == 0.0);
  }
}

TEST_CASE("nonnegative data keeps the solution nonnegative") {
  ProblemSpec spec = base_problem(0.7, 0.0, 0.0, 128);
  TabulatedSource bumpy;
  bumpy.radii = {0.0, 0.2, 0.35, 0.6, 0.8, 1.0};
  bumpy.values = {0.0, 3.0, 0.5, 2.0, 0.0, 1.0};
  spec.source = bumpy;
  const SolveReport report = picard_solve(spec);
  REQUIRE(report.converged);
  for (double v : report.solution.values) {
    CHECK(v >= -1e-14);
  }
}

TEST_CASE("tabulated constant source equals the power source with gamma = 0") {
  ProblemSpec power_spec = base_problem(0.5, 1.0, 0.0, 128);
  ProblemSpec tab_spec = power_spec;
  tab_spec.source = TabulatedSource{{0.0, 1.0}, {1.0, 1.0}};
  const auto a = picard_solve(power_spec);
  const auto b = picard_solve(tab_spec);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  for (std::size_t i = 0; i < a.solution.size(); ++i) {
    CHECK(std::abs(a.solution.values[i] - b.solution.values[i]) <= 1e-13);
  }
}

TEST_CASE("doubling an inactive truncation level changes nothing") {
  ProblemSpec spec = base_problem(0.5, 1.0, 0.0, 128);
  spec.truncation_level = 10.0;
  const auto at_n = picard_solve(spec);
  REQUIRE(at_n.converged);
  REQUIRE(at_n.solution.max_abs() < spec.truncation_level);
  spec.truncation_level = 20.0;
  const auto at_2n = picard_solve(spec);
  for (std::size_t i = 0; i < at_n.solution.size(); ++i) {
    CHECK(std::abs(at_n.solution.values[i] - at_2n.solution.values[i]) <=
          spec.iteration.tolerance);
  }
}

TEST_CASE("weak residual of converged solves sits at the iteration tolerance") {
  for (double theta : {0.5, 1.0}) {
    ProblemSpec spec = base_problem(theta, 1.0, theta == 1.0 ? 1.0 : 0.0, 512);
    const SolveReport report = picard_solve(spec);
    REQUIRE(report.converged);
    CHECK(report.weak_residual <= 10.0 * spec.iteration.tolerance);
  }
}

TEST_CASE("weak residual of sampled oracle profiles decays at second order") {
  robin::RadialExampleSpec oracle;
  oracle.theta = 1.0;
  oracle.amplitude = 1.0;
  oracle.gamma = 1.0;
  const auto form = robin::solve_boundary_value(oracle);
  std::vector<double> hs, residuals;
  for (int cells : {256, 512, 1024}) {
    ProblemSpec spec = base_problem(1.0, 1.0, 1.0, cells);
    const auto nodes = robin::mesh_nodes(spec);
    const auto u = robin::sample_u(form, oracle, nodes);
    hs.push_back(1.0 / cells);
    residuals.push_back(robin::weak_residual(spec, u));
  }
  CHECK(fit_slope(hs, residuals) >= 1.8);
}

TEST_CASE("B(u) solves the transformed Poisson problem in the interior") {
  std::vector<double> hs, residuals;
  for (int cells : {128, 256, 512}) {
    ProblemSpec spec = base_problem(0.5, 1.0, 0.0, cells);
    const SolveReport report = picard_solve(spec);
    REQUIRE(report.converged);
    ProblemSpec poisson = spec;
    poisson.theta = 0.0;  // b == 1: interior operator is the Laplacian
    hs.push_back(1.0 / cells);
    residuals.push_back(
        robin::weak_residual(poisson, report.v_equivalent, false));
  }
  CHECK(fit_slope(hs, residuals) >= 1.8);
}

TEST_CASE("spec validation") {
  ProblemSpec spec = base_problem(0.5, 1.0, 0.0, 64);
  spec.mesh.cells = 8;
  CHECK_THROWS_AS(robin::validate(spec), std::invalid_argument);
  spec = base_problem(0.5, 1.0, 0.0, 64);
  spec.truncation_level = 0.0;
  CHECK_THROWS_AS(robin::validate(spec), std::invalid_argument);
  spec = base_problem(0.5, 1.0, 0.0, 64);
  spec.iteration.damping = 1.5;
  CHECK_THROWS_AS(robin::validate(spec), std::invalid_argument);
  spec = base_problem(1.5, 1.0, 0.0, 64);
  CHECK_THROWS_AS(robin::validate(spec), std::domain_error);
  spec = base_problem(0.5, 1.0, 3.0, 64);  // gamma >= N
  CHECK_THROWS_AS(robin::validate(spec), std::domain_error);
  spec = base_problem(0.5, 1.0, 0.0, 64);
  spec.source = TabulatedSource{{0.0, 0.0}, {1.0, 1.0}};
  CHECK_THROWS_AS(robin::validate(spec), std::invalid_argument);
}

}  // TEST_SUITE
