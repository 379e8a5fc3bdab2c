#include "robin/norms.hpp"

#include "robin/coefficients.hpp"
#include "robin/regimes.hpp"
#include "detail/weighted_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace robin {

double unit_ball_volume(int dimension) {
  if (dimension < 1) throw std::domain_error("unit_ball_volume: dimension >= 1");
  return std::pow(std::numbers::pi, 0.5 * dimension) /
         std::tgamma(0.5 * dimension + 1.0);
}

double unit_sphere_area(int dimension) {
  return dimension * unit_ball_volume(dimension);
}

std::vector<double> quadrature_weights(const RadialGridFunction& g) {
  const double area = unit_sphere_area(g.dimension);
  std::vector<double> w(g.size(), 0.0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double a = g.nodes[i], b = g.nodes[i + 1];
    w[i] += area * detail::falling_hat_integral(a, b, 1.0, 0.0, g.dimension, 0.0);
    w[i + 1] += area * detail::rising_hat_integral(a, b, 1.0, 0.0, g.dimension, 0.0);
  }
  return w;
}

double lp_norm(const RadialGridFunction& g, double p) {
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
  const std::vector<double> w = quadrature_weights(g);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += w[i] * std::pow(std::abs(g.values[i]), p);
  }
  return std::pow(acc, 1.0 / p);
}

std::vector<double> nodal_gradient(const RadialGridFunction& g) {
  const auto& r = g.nodes;
  const auto& u = g.values;
  const std::size_t m = r.size();
  std::vector<double> du(m);
  if (m == 2) {
    du[0] = du[1] = (u[1] - u[0]) / (r[1] - r[0]);
    return du;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double hl = r[i] - r[i - 1];
    const double hr = r[i + 1] - r[i];
    du[i] = (-u[i - 1] * hr / hl + u[i] * (hr / hl - hl / hr) +
             u[i + 1] * hl / hr) /
            (hl + hr);
  }
  {
    const double h1 = r[1] - r[0], h2 = r[2] - r[1];
    du[0] = (-u[2] * h1 * h1 + u[1] * (h1 + h2) * (h1 + h2) -
             u[0] * (h2 * h2 + 2.0 * h1 * h2)) /
            (h1 * h2 * (h1 + h2));
  }
  {
    const double h1 = r[m - 1] - r[m - 2], h2 = r[m - 2] - r[m - 3];
    du[m - 1] = (u[m - 3] * h1 * h1 - u[m - 2] * (h1 + h2) * (h1 + h2) +
                 u[m - 1] * (h2 * h2 + 2.0 * h1 * h2)) /
                (h1 * h2 * (h1 + h2));
  }
  return du;
}

double gradient_lp_norm(const RadialGridFunction& g, double p) {
  if (!(p >= 1.0)) throw std::domain_error("gradient_lp_norm: p must be >= 1");
  const std::vector<double> w = quadrature_weights(g);
  const std::vector<double> du = nodal_gradient(g);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += w[i] * std::pow(std::abs(du[i]), p);
  }
  return std::pow(acc, 1.0 / p);
}

double h1_norm(const RadialGridFunction& g) {
  const double lp = lp_norm(g, 2.0);
  const double grad = gradient_lp_norm(g, 2.0);
  return std::sqrt(lp * lp + grad * grad);
}

double w1p_norm(const RadialGridFunction& g, double p) {
  const double lp = lp_norm(g, p);
  const double grad = gradient_lp_norm(g, p);
  return std::pow(std::pow(lp, p) + std::pow(grad, p), 1.0 / p);
}

double weighted_gradient_energy(const RadialGridFunction& g, double p_exp,
                                double theta) {
  const std::vector<double> w = quadrature_weights(g);
  const std::vector<double> du = nodal_gradient(g);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += w[i] * du[i] * du[i] *
           std::pow(1.0 + std::abs(g.values[i]), p_exp - 1.0 - theta);
  }
  return acc;
}

double combined_lp_norm(const RadialGridFunction& g, double p, double lambda) {
  if (!(p >= 1.0)) throw std::domain_error("combined_lp_norm: p must be >= 1");
  if (!(lambda >= 0.0)) throw std::domain_error("combined_lp_norm: lambda >= 0");
  const double domain = std::pow(lp_norm(g, p), p);
  const double boundary = lambda *
                          unit_sphere_area(g.dimension) *
                          std::pow(g.radius(), g.dimension - 1) *
                          std::pow(std::abs(g.values.back()), p);
  return std::pow(domain + boundary, 1.0 / p);
}

double distribution_function(const RadialGridFunction& g, double t) {
  if (!(t > 0.0)) throw std::domain_error("distribution_function: t must be > 0");
  const double ball = unit_ball_volume(g.dimension);
  const int dim = g.dimension;
  double measure = 0.0;
  const auto add_shell = [&](double a, double b) {
    measure += ball * (std::pow(b, dim) - std::pow(a, dim));
  };
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double r0 = g.nodes[i], r1 = g.nodes[i + 1];
    // |g| > t means g > t or g < -t; on a cell the linear interpolant meets
    // each side in at most one subinterval, and for t > 0 they are disjoint.
    for (double sign : {1.0, -1.0}) {
      const double g0 = sign * g.values[i];
      const double g1 = sign * g.values[i + 1];
      const bool in0 = g0 > t, in1 = g1 > t;
      if (in0 && in1) {
        add_shell(r0, r1);
      } else if (in0 != in1) {
        const double rc = r0 + (t - g0) / (g1 - g0) * (r1 - r0);
        if (in0) {
          add_shell(r0, rc);
        } else {
          add_shell(rc, r1);
        }
      }
    }
  }
  return measure;
}

double marcinkiewicz_sup(const RadialGridFunction& g, double p) {
  if (!(p > 1.0)) throw std::domain_error("marcinkiewicz_sup: p must be > 1");
  const double top = g.max_abs();
  if (top == 0.0) return 0.0;

  const auto value = [&](double t) {
    return std::pow(t, p) * distribution_function(g, t);
  };

  // Coarse log scan plus nodal candidates (plateaus of |g| put the supremum
  // just below a nodal value), then refine around the best point.
  std::set<double> candidates;
  const int coarse = 256;
  const double lo = top * 1e-9;
  for (int j = 0; j <= coarse; ++j) {
    candidates.insert(lo * std::pow(top / lo, static_cast<double>(j) / coarse));
  }
  for (double v : g.values) {
    const double a = std::abs(v);
    if (a > 0.0) candidates.insert(a * (1.0 - 1e-12));
  }

  double best_t = top;
  double best = 0.0;
  for (double t : candidates) {
    const double val = value(t);
    if (val > best) {
      best = val;
      best_t = t;
    }
  }

  double span = std::pow(top / lo, 1.0 / coarse);  // one coarse step, as ratio
  for (int round = 0; round < 3; ++round) {
    const double a = best_t / span;
    const double b = std::min(best_t * span, top);
    const int fine = 64;
    for (int j = 0; j <= fine; ++j) {
      const double t = a * std::pow(b / a, static_cast<double>(j) / fine);
      const double val = value(t);
      if (val > best) {
        best = val;
        best_t = t;
      }
    }
    span = std::pow(span, 1.0 / 8.0);
  }
  return best;
}

double marcinkiewicz_quasinorm(const RadialGridFunction& g, double p) {
  return std::pow(marcinkiewicz_sup(g, p), 1.0 / p);
}

TraceReport trace_report(const RadialGridFunction& g, double p) {
  if (!(p >= 1.0)) throw std::domain_error("trace_report: p must be >= 1");
  TraceReport report;
  report.boundary_value = std::abs(g.values.back());
  const double sphere = unit_sphere_area(g.dimension) *
                        std::pow(g.radius(), g.dimension - 1);
  report.trace_lp = std::pow(sphere, 1.0 / p) * report.boundary_value;
  return report;
}

double power_source_lq_norm(int dimension, double radius, double amplitude,
                            double gamma, double q) {
  if (!(q >= 1.0)) throw std::domain_error("power_source_lq_norm: q must be >= 1");
  if (!(gamma >= 0.0)) throw std::domain_error("power_source_lq_norm: gamma >= 0");
  const double e = dimension - gamma * q;
  if (!(e > 0.0)) {
    throw std::domain_error(
        "power_source_lq_norm: f = A/|x|^gamma is not in L^q (gamma q >= N)");
  }
  return amplitude *
         std::pow(unit_sphere_area(dimension) * std::pow(radius, e) / e, 1.0 / q);
}

NormReport norm_report(const RadialGridFunction& g,
                       std::span<const double> lp_exponents,
                       std::span<const double> marcinkiewicz_indices, double s,
                       double trace_p, double p_exp, double theta) {
  NormReport report;
  for (double p : lp_exponents) report.lp[p] = lp_norm(g, p);
  report.gradient_l2_weighted = weighted_gradient_energy(g, p_exp, theta);
  report.w1s = w1p_norm(g, s);
  report.h1 = h1_norm(g);
  const TraceReport trace = trace_report(g, trace_p);
  report.trace_value = trace.boundary_value;
  report.trace_lp = trace.trace_lp;
  for (double p : marcinkiewicz_indices) {
    report.marcinkiewicz[p] = marcinkiewicz_quasinorm(g, p);
  }
  return report;
}

namespace {

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::vector<LinftyEstimateRow> estimate_harness_linfty(
    const RadialExampleSpec& base, std::span<const double> amplitudes,
    double q) {
  validate(base);
  const RegimeReport regime = classify(base.dimension, base.theta, q);
  if (regime.regime != Regime::bounded) {
    throw std::invalid_argument(
        "estimate_harness_linfty: q is not in the bounded regime (q <= N/2)");
  }
  if (!(base.gamma * q < base.dimension)) {
    throw std::invalid_argument(
        "estimate_harness_linfty: source is not in L^q (gamma q >= N)");
  }

  std::vector<LinftyEstimateRow> rows;
  rows.reserve(amplitudes.size());
  for (double amplitude : amplitudes) {
    RadialExampleSpec spec = base;
    spec.amplitude = amplitude;
    LinftyEstimateRow row;
    row.amplitude = amplitude;
    row.source_lq =
        power_source_lq_norm(spec.dimension, spec.radius, amplitude, spec.gamma, q);
    const RadialClosedForm form = solve_boundary_value(spec);
    row.exists = form.exists;
    if (form.exists) {
      // max u sits at the origin and B(u(0)) is v(0) by construction.
      row.B_of_max_u = v_profile(form, spec, 0.0);
    }
    rows.push_back(row);
  }
  return rows;
}

EnergyEstimateTable estimate_harness_energy(const RadialExampleSpec& base,
                                            std::span<const double> amplitudes,
                                            double q, int mesh_cells) {
  validate(base);
  if (!(base.theta < 1.0)) {
    throw std::invalid_argument("estimate_harness_energy: requires theta < 1");
  }
  const RegimeReport regime = classify(base.dimension, base.theta, q);
  if (regime.regime != Regime::energy) {
    throw std::invalid_argument(
        "estimate_harness_energy: (N, theta, q) is not in the energy regime");
  }
  if (!(base.gamma * q < base.dimension)) {
    throw std::invalid_argument(
        "estimate_harness_energy: source is not in L^q (gamma q >= N)");
  }

  EnergyEstimateTable table;
  table.q = q;
  table.norm_exponent = *regime.summability_exponent;

  const std::vector<double> mesh = graded_mesh(base.radius, mesh_cells, 2.0);
  for (double amplitude : amplitudes) {
    EnergyEstimateRow row;
    row.amplitude = amplitude;
    if (amplitude == 0.0) {
      row.applicable = false;  // ratio would be 0/0
      table.rows.push_back(row);
      continue;
    }
    RadialExampleSpec spec = base;
    spec.amplitude = amplitude;
    const RadialClosedForm form = solve_boundary_value(spec);
    const RadialGridFunction u = sample_u(form, spec, mesh);
    row.u_norm = lp_norm(u, table.norm_exponent);
    row.ratio = std::pow(row.u_norm, 1.0 - base.theta) /
                power_source_lq_norm(spec.dimension, spec.radius, amplitude,
                                     spec.gamma, q);
    row.h1 = h1_norm(u);
    table.rows.push_back(row);
  }
  return table;
}

W1sEstimateTable estimate_harness_w1s(const ProblemSpec& base,
                                      std::span<const double> amplitudes,
                                      double q) {
  validate(base);
  const auto* power = std::get_if<PowerSource>(&base.source);
  if (power == nullptr) {
    throw std::invalid_argument(
        "estimate_harness_w1s: needs a power source (closed-form ||f||_Lq)");
  }
  const RegimeReport regime = classify(base.dimension, base.theta, q);
  if (regime.regime != Regime::non_energy) {
    throw std::invalid_argument(
        "estimate_harness_w1s: (N, theta, q) is not in the non-energy window");
  }
  if (!(power->gamma * q < base.dimension)) {
    throw std::invalid_argument(
        "estimate_harness_w1s: source is not in L^q (gamma q >= N)");
  }

  W1sEstimateTable table;
  table.q = q;
  table.s = *regime.s;

  std::vector<double> slope_a, slope_norm;
  for (double amplitude : amplitudes) {
    ProblemSpec spec = base;
    std::get<PowerSource>(spec.source).amplitude = amplitude;
    const SolveReport solve = picard_solve(spec);
    W1sEstimateRow row;
    row.amplitude = amplitude;
    row.converged = solve.converged;
    row.w1s_norm = w1p_norm(solve.solution, table.s);
    row.source_lq = power_source_lq_norm(spec.dimension, spec.radius, amplitude,
                                         power->gamma, q);
    table.rows.push_back(row);
    if (solve.converged && amplitude > 0.0 && row.w1s_norm > 0.0) {
      slope_a.push_back(amplitude);
      slope_norm.push_back(row.w1s_norm);
    }
  }
  table.loglog_slope =
      slope_a.size() >= 2 ? loglog_slope(slope_a, slope_norm) : 0.0;
  return table;
}

}  // namespace robin
