#include "robin/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robin {

CoefficientFamily::CoefficientFamily(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("CoefficientFamily: theta must lie in [0, 1], got " +
                            std::to_string(theta));
  }
}

double CoefficientFamily::b(double s) const {
  if (!(s >= 0.0)) throw std::domain_error("CoefficientFamily::b: s must be >= 0");
  return std::exp(-theta_ * std::log1p(s));
}

double CoefficientFamily::B(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("CoefficientFamily::B: t must be >= 0");
  if (theta_ == 1.0) return std::log1p(t);
  return std::expm1((1.0 - theta_) * std::log1p(t)) / (1.0 - theta_);
}

double CoefficientFamily::B_inv(double v) const {
  if (!(v >= 0.0)) throw std::domain_error("CoefficientFamily::B_inv: v must be >= 0");
  if (theta_ == 1.0) return std::expm1(v);
  return std::expm1(std::log1p((1.0 - theta_) * v) / (1.0 - theta_));
}

double CoefficientFamily::F(double v) const {
  if (!(v >= 0.0)) throw std::domain_error("CoefficientFamily::F: v must be >= 0");
  if (theta_ == 1.0) return -std::expm1(-v);
  // (1+w)^(1-theta) = 1 + (1-theta) v by construction, hence
  // F = w (1+w)^(-theta) = (1 + (1-theta) v) * w/(1+w).
  const double log1pw = std::log1p((1.0 - theta_) * v) / (1.0 - theta_);
  return (1.0 + (1.0 - theta_) * v) * (-std::expm1(-log1pw));
}

double CoefficientFamily::F_sup() const noexcept {
  return theta_ == 1.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

double gamma_condition_infimum(const CoefficientFamily& family, double t_max,
                               std::size_t samples) {
  if (!(t_max > 0.0)) {
    throw std::domain_error("gamma_condition_infimum: t_max must be > 0");
  }
  if (samples < 100) {
    throw std::invalid_argument("gamma_condition_infimum: need at least 100 samples");
  }
  // t*b/B -> 1 as t -> 0+; seed the minimum with the limit value.
  double infimum = 1.0;
  const double log_hi = std::log(t_max);
  const double log_lo = log_hi - 37.0;  // spans ~16 decades below t_max
  for (std::size_t j = 0; j < samples; ++j) {
    const double t =
        std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(j) /
                              static_cast<double>(samples - 1));
    infimum = std::min(infimum, t * family.b(t) / family.B(t));
  }
  return infimum;
}

PointwiseBound check_pointwise_inequality(double p, double theta, double t) {
  if (!(p > 1.0)) {
    throw std::domain_error("check_pointwise_inequality: p must be > 1");
  }
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::domain_error("check_pointwise_inequality: theta must lie in (0, 1]");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("check_pointwise_inequality: t must be >= 0");
  }
  const double log1pt = std::log1p(t);
  PointwiseBound result;
  result.lhs = t * std::exp(-theta * log1pt) * std::expm1(p * log1pt);
  const double half = std::expm1(0.5 * (p + 1.0 - theta) * log1pt);
  result.rhs = half * half / (p + 1.0);
  result.holds = result.lhs >= result.rhs - 1e-12;
  return result;
}

}  // namespace robin
