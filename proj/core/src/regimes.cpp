#include "robin/regimes.hpp"

#include <limits>
#include <stdexcept>

namespace robin {

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::bounded: return "bounded";
    case Regime::energy: return "energy";
    case Regime::non_energy: return "non_energy";
    case Regime::below_scope: return "below_scope";
  }
  return "unknown";
}

template <class T>
RegimeReportT<T> classify(int dimension, const T& theta, const T& q) {
  if (dimension <= 2) {
    throw std::domain_error("classify: dimension must be >= 3");
  }
  if (!(theta > T(0)) || !(theta <= T(1))) {
    throw std::domain_error("classify: theta must lie in (0, 1]");
  }
  if (!(q > T(1))) {
    throw std::domain_error("classify: q must be > 1");
  }

  const T n(dimension);
  const T one(1), two(2);

  RegimeReportT<T> report;
  report.q_lower_nonenergy = (two * n - n * theta) / (n + two - n * theta);
  report.q_lower_energy = two * n / (n + two - theta * (n - two));
  report.q_bounded = n / two;

  if (q > report.q_bounded) {
    report.regime = Regime::bounded;
  } else if (q >= report.q_lower_energy && q < report.q_bounded) {
    report.regime = Regime::energy;
    const T q_star_star = q * n / (n - two * q);
    report.q_double_star = q_star_star;
    report.summability_exponent = q_star_star * (one - theta);
    report.p_test = (one - theta) * n * (q - one) / (n - two * q);
    report.trace_exponent = *report.p_test + one - theta;
  } else if (q >= report.q_lower_nonenergy && q < report.q_lower_energy) {
    report.regime = Regime::non_energy;
    const T s = (two * n - n * theta) / (n - theta);
    report.s = s;
    report.s_conj = theta * s / (two - s);
  } else {
    // Includes both q below every window and the single point q == N/2,
    // where neither neighbouring regime applies (both bounds are strict).
    report.regime = Regime::below_scope;
  }
  return report;
}

template RegimeReportT<double> classify<double>(int, const double&, const double&);
template RegimeReportT<Rational> classify<Rational>(int, const Rational&,
                                                    const Rational&);

SourceSummability power_source_summability(int dimension, double gamma) {
  if (dimension < 2) {
    throw std::domain_error("power_source_summability: dimension must be >= 2");
  }
  if (!(gamma >= 0.0) || gamma >= static_cast<double>(dimension)) {
    throw std::domain_error(
        "power_source_summability: gamma must lie in [0, N)");
  }
  if (gamma == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  const double index = static_cast<double>(dimension) / gamma;
  return {index, index};
}

}  // namespace robin
