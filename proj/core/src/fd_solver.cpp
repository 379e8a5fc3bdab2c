#include "robin/fd_solver.hpp"

#include "robin/coefficients.hpp"
#include "detail/weighted_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robin {

namespace {

double truncated(double value, double level) {
  return std::clamp(value, -level, level);
}

std::vector<double> interpolate_tabulated(const TabulatedSource& tab,
                                          std::span<const double> nodes) {
  std::vector<double> out(nodes.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double r = nodes[i];
    if (r <= tab.radii.front()) {
      out[i] = tab.values.front();
      continue;
    }
    if (r >= tab.radii.back()) {
      out[i] = tab.values.back();
      continue;
    }
    while (tab.radii[k + 1] < r) ++k;
    const double w = (r - tab.radii[k]) / (tab.radii[k + 1] - tab.radii[k]);
    out[i] = (1.0 - w) * tab.values[k] + w * tab.values[k + 1];
  }
  return out;
}

// Hat-function loads int f phi_i r^(N-1) dr on arbitrary nodes, exact for
// power densities and for piecewise-linear tabulated ones.
std::vector<double> hat_loads(const ProblemSpec& spec,
                              std::span<const double> nodes) {
  const int dim = spec.dimension;
  std::vector<double> loads(nodes.size(), 0.0);
  if (const auto* power = std::get_if<PowerSource>(&spec.source)) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const double a = nodes[i], b = nodes[i + 1];
      loads[i] += detail::falling_hat_integral(a, b, power->amplitude, 0.0, dim,
                                               power->gamma);
      loads[i + 1] += detail::rising_hat_integral(a, b, power->amplitude, 0.0,
                                                  dim, power->gamma);
    }
  } else {
    const auto& tab = std::get<TabulatedSource>(spec.source);
    const std::vector<double> f = interpolate_tabulated(tab, nodes);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      const double a = nodes[i], b = nodes[i + 1];
      const double slope = (f[i + 1] - f[i]) / (b - a);
      const double c0 = f[i] - slope * a;
      loads[i] += detail::falling_hat_integral(a, b, c0, slope, dim, 0.0);
      loads[i + 1] += detail::rising_hat_integral(a, b, c0, slope, dim, 0.0);
    }
  }
  return loads;
}

StallDiagnosis diagnose_stall(const std::vector<double>& history) {
  if (history.size() < 3) return StallDiagnosis::oscillation;
  const std::size_t window = std::min<std::size_t>(10, history.size());
  bool growing = true;
  for (std::size_t i = history.size() - window; i + 1 < history.size(); ++i) {
    if (!(history[i] < history[i + 1])) {
      growing = false;
      break;
    }
  }
  return growing ? StallDiagnosis::blow_up : StallDiagnosis::oscillation;
}

}  // namespace

void validate(const ProblemSpec& spec) {
  if (spec.dimension < 3) {
    throw std::domain_error("ProblemSpec: dimension must be >= 3");
  }
  if (!(spec.radius > 0.0)) throw std::domain_error("ProblemSpec: radius must be > 0");
  if (!(spec.beta > 0.0)) throw std::domain_error("ProblemSpec: beta must be > 0");
  if (!(spec.theta >= 0.0 && spec.theta <= 1.0)) {
    throw std::domain_error("ProblemSpec: theta must lie in [0, 1]");
  }
  if (const auto* power = std::get_if<PowerSource>(&spec.source)) {
    if (!(power->amplitude >= 0.0)) {
      throw std::domain_error("ProblemSpec: source amplitude must be >= 0");
    }
    if (!(power->gamma >= 0.0 && power->gamma < spec.dimension)) {
      throw std::domain_error("ProblemSpec: source gamma must lie in [0, N)");
    }
  } else {
    const auto& tab = std::get<TabulatedSource>(spec.source);
    if (tab.radii.size() < 2 || tab.radii.size() != tab.values.size()) {
      throw std::invalid_argument(
          "ProblemSpec: tabulated source needs matching radii/values with >= 2 "
          "samples");
    }
    for (std::size_t i = 0; i + 1 < tab.radii.size(); ++i) {
      if (!(tab.radii[i] < tab.radii[i + 1])) {
        throw std::invalid_argument(
            "ProblemSpec: tabulated radii must be strictly increasing");
      }
    }
    for (double v : tab.values) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("ProblemSpec: tabulated values must be finite");
      }
    }
  }
  if (spec.mesh.cells < 16) {
    throw std::invalid_argument("ProblemSpec: mesh needs at least 16 cells");
  }
  if (spec.mesh.grading && !(*spec.mesh.grading > 0.0)) {
    throw std::invalid_argument("ProblemSpec: mesh grading must be > 0");
  }
  if (!(spec.truncation_level > 0.0)) {
    throw std::invalid_argument("ProblemSpec: truncation level must be > 0");
  }
  if (spec.iteration.max_steps < 1) {
    throw std::invalid_argument("ProblemSpec: max_steps must be >= 1");
  }
  if (!(spec.iteration.damping > 0.0 && spec.iteration.damping <= 1.0)) {
    throw std::invalid_argument("ProblemSpec: damping must lie in (0, 1]");
  }
  if (!(spec.iteration.tolerance > 0.0)) {
    throw std::invalid_argument("ProblemSpec: tolerance must be > 0");
  }
}

double resolved_grading(const ProblemSpec& spec) {
  if (spec.mesh.grading) return *spec.mesh.grading;
  if (const auto* power = std::get_if<PowerSource>(&spec.source)) {
    if (power->gamma >= 1.0) return 2.0;  // resolve the r^(-gamma) data singularity
  }
  return 1.0;
}

std::vector<double> mesh_nodes(const ProblemSpec& spec) {
  validate(spec);
  return graded_mesh(spec.radius, spec.mesh.cells, resolved_grading(spec));
}

TridiagonalSystem assemble_linear_system(const ProblemSpec& spec,
                                         const RadialGridFunction& frozen) {
  validate(spec);
  const auto& r = frozen.nodes;
  const std::size_t m = r.size();
  if (m < 3) throw std::invalid_argument("assemble_linear_system: mesh too small");
  if (std::abs(frozen.radius() - spec.radius) > 1e-12 * spec.radius ||
      r.front() != 0.0) {
    throw std::invalid_argument(
        "assemble_linear_system: frozen iterate must live on the problem's "
        "mesh over [0, R]");
  }

  const CoefficientFamily family(spec.theta);
  const double level = spec.truncation_level;
  const int dim = spec.dimension;

  TridiagonalSystem sys;
  sys.diag.assign(m, 0.0);
  sys.lower.assign(m, 0.0);
  sys.upper.assign(m, 0.0);
  sys.rhs = hat_loads(spec, r);

  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double a = r[i], b = r[i + 1];
    const double h = b - a;
    const double mid = 0.5 * (frozen.values[i] + frozen.values[i + 1]);
    const double coeff = family.b(std::abs(truncated(mid, level)));
    const double k = coeff * detail::shell_weight(a, b, dim) / (h * h);
    sys.diag[i] += k;
    sys.diag[i + 1] += k;
    sys.upper[i] = -k;
    sys.lower[i + 1] = -k;
  }

  const double boundary_coeff =
      family.b(std::abs(truncated(frozen.values.back(), level)));
  sys.diag[m - 1] += spec.beta * boundary_coeff * std::pow(spec.radius, dim - 1);
  return sys;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
  const std::size_t n = system.diag.size();
  if (n == 0 || system.lower.size() != n || system.upper.size() != n ||
      system.rhs.size() != n) {
    throw std::invalid_argument("solve_tridiagonal: inconsistent system");
  }
  std::vector<double> c(n), d(n), x(n);
  double pivot = system.diag[0];
  if (!(std::abs(pivot) > 0.0) || !std::isfinite(pivot)) {
    throw std::runtime_error("solve_tridiagonal: singular system (b underflowed?)");
  }
  c[0] = system.upper[0] / pivot;
  d[0] = system.rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = system.diag[i] - system.lower[i] * c[i - 1];
    if (!(std::abs(pivot) > 0.0) || !std::isfinite(pivot)) {
      throw std::runtime_error("solve_tridiagonal: singular system (b underflowed?)");
    }
    c[i] = system.upper[i] / pivot;
    d[i] = (system.rhs[i] - system.lower[i] * d[i - 1]) / pivot;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = d[i] - c[i] * x[i + 1];
  }
  return x;
}

SolveReport picard_solve(const ProblemSpec& spec) {
  const std::vector<double> nodes = mesh_nodes(spec);
  const std::size_t m = nodes.size();

  SolveReport report;
  report.solution =
      RadialGridFunction(nodes, std::vector<double>(m, 0.0), spec.dimension);

  const double damping = spec.iteration.damping;
  for (int step = 0; step < spec.iteration.max_steps; ++step) {
    const TridiagonalSystem sys = assemble_linear_system(spec, report.solution);
    std::vector<double> next = solve_tridiagonal(sys);

    double update = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (1.0 - damping) * report.solution.values[i] + damping * next[i];
      update = std::max(update, std::abs(next[i] - report.solution.values[i]));
      scale = std::max(scale, std::abs(next[i]));
    }
    report.solution.values = std::move(next);
    report.sup_history.push_back(scale);
    report.picard_iterations = step + 1;
    report.final_update_norm =
        update == 0.0 ? 0.0
                      : update / std::max(scale, std::numeric_limits<double>::min());
    if (report.final_update_norm <= spec.iteration.tolerance) {
      report.converged = true;
      break;
    }
  }
  if (!report.converged) {
    report.diagnosis = diagnose_stall(report.sup_history);
  }

  report.truncation_active = report.solution.max_abs() >= spec.truncation_level;

  const CoefficientFamily family(spec.theta);
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double u = report.solution.values[i];
    v[i] = std::copysign(family.B(std::abs(u)), u);
  }
  report.v_equivalent = RadialGridFunction(nodes, std::move(v), spec.dimension);

  report.weak_residual = weak_residual(spec, report.solution);
  return report;
}

std::vector<SolveReport> truncation_sweep(const ProblemSpec& spec,
                                          std::span<const double> levels) {
  if (levels.empty()) {
    throw std::invalid_argument("truncation_sweep: need at least one level");
  }
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!(levels[i] < levels[i + 1])) {
      throw std::invalid_argument("truncation_sweep: levels must be increasing");
    }
  }
  std::vector<SolveReport> reports;
  reports.reserve(levels.size());
  for (double level : levels) {
    ProblemSpec at_level = spec;
    at_level.truncation_level = level;
    reports.push_back(picard_solve(at_level));
  }
  return reports;
}

double weak_residual(const ProblemSpec& spec, const RadialGridFunction& candidate,
                     bool include_robin_row) {
  validate(spec);
  if (candidate.size() < 3) {
    throw std::invalid_argument("weak_residual: candidate grid too small");
  }
  if (candidate.nodes.front() != 0.0 ||
      std::abs(candidate.radius() - spec.radius) > 1e-12 * spec.radius) {
    throw std::invalid_argument("weak_residual: candidate must cover [0, R]");
  }

  const CoefficientFamily family(spec.theta);
  const auto& r = candidate.nodes;
  const auto& u = candidate.values;
  const std::size_t m = r.size();
  const int dim = spec.dimension;

  std::vector<double> rows(hat_loads(spec, r));
  for (double& v : rows) v = -v;
  std::vector<double> test_norm2(m, 0.0);

  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double a = r[i], b = r[i + 1];
    const double h = b - a;
    const double weight = detail::shell_weight(a, b, dim);
    const double coeff = family.b(std::abs(0.5 * (u[i] + u[i + 1])));
    const double k = coeff * weight / (h * h);
    rows[i] += k * (u[i] - u[i + 1]);
    rows[i + 1] += k * (u[i + 1] - u[i]);
    test_norm2[i] += weight / (h * h);
    test_norm2[i + 1] += weight / (h * h);
  }

  std::size_t last = m;
  if (include_robin_row) {
    rows[m - 1] += spec.beta * family.b(std::abs(u[m - 1])) * u[m - 1] *
                   std::pow(spec.radius, dim - 1);
  } else {
    last = m - 1;  // interior equations only
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < last; ++i) {
    residual = std::max(residual, std::abs(rows[i]) / std::sqrt(test_norm2[i]));
  }
  return residual;
}

}  // namespace robin
