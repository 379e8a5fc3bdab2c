#include "robin/radial_oracle.hpp"

#include "robin/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robin {

void validate(const RadialExampleSpec& spec) {
  if (spec.dimension < 3) {
    throw std::domain_error("RadialExampleSpec: dimension must be >= 3");
  }
  if (!(spec.radius > 0.0)) {
    throw std::domain_error("RadialExampleSpec: radius must be > 0");
  }
  if (!(spec.beta > 0.0)) {
    throw std::domain_error("RadialExampleSpec: beta must be > 0");
  }
  if (!(spec.theta > 0.0 && spec.theta <= 1.0)) {
    throw std::domain_error("RadialExampleSpec: theta must lie in (0, 1]");
  }
  if (!(spec.amplitude >= 0.0)) {
    throw std::domain_error("RadialExampleSpec: amplitude must be >= 0");
  }
  if (!(spec.gamma >= 0.0 && spec.gamma < 2.0)) {
    throw std::domain_error(
        "RadialExampleSpec: gamma must lie in [0, 2); the closed form divides "
        "by 2 - gamma and is only bounded there");
  }
}

double boundary_load(const RadialExampleSpec& spec) {
  validate(spec);
  return spec.amplitude * std::pow(spec.radius, 1.0 - spec.gamma) /
         (spec.beta * (spec.dimension - spec.gamma));
}

RadialClosedForm solve_boundary_value(const RadialExampleSpec& spec) {
  RadialClosedForm form;
  form.load = boundary_load(spec);
  if (form.load == 0.0) {
    form.exists = true;
    form.boundary_value = 0.0;
    return form;
  }

  const CoefficientFamily family(spec.theta);
  if (form.load >= family.F_sup()) {
    form.exists = false;  // theta = 1 with load >= sup F = 1: no bounded solution
    return form;
  }

  // F is strictly increasing with F(0) = 0 < load < sup F, so a bracket is
  // reached by doubling and bisection converges to the unique root.
  double hi = 1.0;
  while (family.F(hi) < form.load) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket is down to adjacent doubles
    if (family.F(mid) < form.load) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  form.boundary_value = 0.5 * (lo + hi);
  form.exists = true;
  return form;
}

namespace {

void require_exists(const RadialClosedForm& form, const char* where) {
  if (!form.exists) {
    throw std::logic_error(std::string(where) +
                           ": no bounded radial solution for this spec "
                           "(boundary load >= sup F)");
  }
}

}  // namespace

double v_profile(const RadialClosedForm& form, const RadialExampleSpec& spec,
                 double r) {
  require_exists(form, "v_profile");
  validate(spec);
  if (!(r >= 0.0 && r <= spec.radius * (1.0 + 1e-14))) {
    throw std::domain_error("v_profile: r must lie in [0, R]");
  }
  const double e = 2.0 - spec.gamma;
  return form.boundary_value +
         spec.amplitude / (spec.dimension - spec.gamma) *
             (std::pow(spec.radius, e) - std::pow(r, e)) / e;
}

double u_profile(const RadialClosedForm& form, const RadialExampleSpec& spec,
                 double r) {
  return CoefficientFamily(spec.theta).B_inv(v_profile(form, spec, r));
}

double ode_residual(const RadialClosedForm& form, const RadialExampleSpec& spec,
                    std::span<const double> radii) {
  require_exists(form, "ode_residual");
  validate(spec);
  if (radii.size() < 3) {
    throw std::invalid_argument("ode_residual: need at least 3 radii");
  }

  const std::size_t m = radii.size();
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = v_profile(form, spec, radii[i]);

  const int dim = spec.dimension;
  double residual = 0.0;

  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double hl = radii[i] - radii[i - 1];
    const double hr = radii[i + 1] - radii[i];
    const double d2 = 2.0 * (v[i - 1] / (hl * (hl + hr)) - v[i] / (hl * hr) +
                             v[i + 1] / (hr * (hl + hr)));
    const double d1 = (-v[i - 1] * hr / hl + v[i] * (hr / hl - hl / hr) +
                       v[i + 1] * hl / hr) /
                      (hl + hr);
    const double f = spec.amplitude * std::pow(radii[i], -spec.gamma);
    residual = std::max(residual,
                        std::abs(-d2 - (dim - 1) / radii[i] * d1 - f));
  }

  // Zero-flux consistency across the first cell when the grid reaches the
  // axis: r^(N-1) v' must match -A r^(N-gamma)/(N-gamma), which tends to 0.
  if (radii[0] == 0.0) {
    const double h = radii[1] - radii[0];
    const double r_mid = 0.5 * (radii[0] + radii[1]);
    const double flux = std::pow(r_mid, dim - 1) * (v[1] - v[0]) / h;
    const double flux_exact = -spec.amplitude *
                              std::pow(r_mid, dim - spec.gamma) /
                              (dim - spec.gamma);
    residual = std::max(residual, std::abs(flux - flux_exact));
  }

  // Robin line at the outer end: v'(R) + beta F(v(R)) = 0, one-sided 3-point
  // derivative.
  if (std::abs(radii[m - 1] - spec.radius) <= 1e-14 * spec.radius) {
    const double h1 = radii[m - 1] - radii[m - 2];
    const double h2 = radii[m - 2] - radii[m - 3];
    const double d1 = (v[m - 3] * h1 * h1 - v[m - 2] * (h1 + h2) * (h1 + h2) +
                       v[m - 1] * (h2 * h2 + 2.0 * h1 * h2)) /
                      (h1 * h2 * (h1 + h2));
    const double robin =
        d1 + spec.beta * CoefficientFamily(spec.theta).F(v[m - 1]);
    residual = std::max(residual, std::abs(robin));
  }

  return residual;
}

RadialGridFunction sample_u(const RadialClosedForm& form,
                            const RadialExampleSpec& spec,
                            std::span<const double> nodes) {
  require_exists(form, "sample_u");
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    values[i] = u_profile(form, spec, nodes[i]);
  }
  return {std::vector<double>(nodes.begin(), nodes.end()), std::move(values),
          spec.dimension};
}

RadialGridFunction sample_v(const RadialClosedForm& form,
                            const RadialExampleSpec& spec,
                            std::span<const double> nodes) {
  require_exists(form, "sample_v");
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    values[i] = v_profile(form, spec, nodes[i]);
  }
  return {std::vector<double>(nodes.begin(), nodes.end()), std::move(values),
          spec.dimension};
}

}  // namespace robin
