#pragma once

#include <cstddef>

namespace robin {

/// Degenerate diffusion coefficient b(s) = (1+s)^(-theta) together with its
/// primitive B, the inverse B^(-1), and the boundary response F that governs
/// Robin problems after the substitution v = B(u).
///
/// The exponent theta in (0, 1] controls the degeneracy:
///   theta < 1 : B and F are both unbounded,
///   theta = 1 : B is unbounded but sup F = 1, which is what makes bounded
///               radial solutions disappear for large boundary loads.
/// theta = 0 is also accepted as the uniformly elliptic limit (b == 1); the
/// solver self-tests use it, the degenerate theory does not.
class CoefficientFamily {
public:
  explicit CoefficientFamily(double theta);

  double theta() const noexcept { return theta_; }

  /// b(s) = (1+s)^(-theta) for s >= 0.  Strictly decreasing, b(0) = 1.
  double b(double s) const;

  /// B(t) = integral of b over [0, t].  Closed form:
  ///   theta < 1: ((1+t)^(1-theta) - 1)/(1-theta),   theta = 1: log(1+t).
  double B(double t) const;

  /// Inverse of B; B_inv(B(t)) == t up to round-off.
  double B_inv(double v) const;

  /// F(v) = b(B_inv(v)) * B_inv(v).  Strictly increasing with F(0) = 0.
  /// For theta = 1 this is 1 - exp(-v).  Evaluated through
  /// (1 + (1-theta) v) * w/(1+w), w = B_inv(v), which stays finite even when
  /// w itself would overflow.
  double F(double v) const;

  /// sup over v >= 0 of F(v): +infinity for theta < 1, exactly 1 at theta = 1.
  double F_sup() const noexcept;

private:
  double theta_;
};

/// Minimum of t*b(t)/B(t) over a log-spaced sample of (0, t_max], with the
/// t -> 0+ limit value 1 included as a candidate.  For theta < 1 the ratio is
/// bounded below by Gamma = 1 - theta and tends to it as t_max grows; for
/// theta = 1 it decays to zero, i.e. the structural condition
/// t b(t) >= Gamma B(t) fails for every positive Gamma.
double gamma_condition_infimum(const CoefficientFamily& family, double t_max,
                               std::size_t samples);

/// Both sides of the pointwise bound that absorbs the boundary term when the
/// problem is tested against (1+|u|)^p - 1:
///   t (1+t)^(-theta) ((1+t)^p - 1)  >=  ((1+t)^((p+1-theta)/2) - 1)^2 / (p+1).
struct PointwiseBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  ///< lhs >= rhs - 1e-12
};

PointwiseBound check_pointwise_inequality(double p, double theta, double t);

}  // namespace robin
