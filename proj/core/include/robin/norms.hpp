#pragma once

#include "robin/fd_solver.hpp"
#include "robin/grid.hpp"
#include "robin/radial_oracle.hpp"

#include <map>
#include <span>
#include <vector>

namespace robin {

double unit_ball_volume(int dimension);
double unit_sphere_area(int dimension);

/// Nodal quadrature weights w_i = omega_{N-1} * int phi_i(r) r^(N-1) dr for
/// the hat basis on g's nodes; sum w_i is the exact volume of the covered
/// shell.  All domain integrals below use these weights.
std::vector<double> quadrature_weights(const RadialGridFunction& g);

/// ( int_{B_R} |g|^p dx )^(1/p), p >= 1.
double lp_norm(const RadialGridFunction& g, double p);

/// Nodal radial derivative by 3-point finite differences (one-sided at the
/// two ends), consistent with the solver's mesh.
std::vector<double> nodal_gradient(const RadialGridFunction& g);

double gradient_lp_norm(const RadialGridFunction& g, double p);
double h1_norm(const RadialGridFunction& g);
double w1p_norm(const RadialGridFunction& g, double p);

/// int |grad u|^2 (1+|u|)^(p_exp - 1 - theta) dx, the weighted gradient
/// energy controlled in the energy regime.
double weighted_gradient_energy(const RadialGridFunction& g, double p_exp,
                                double theta);

/// ( int |g|^p dx + lambda |bd B_R| |g(R)|^p )^(1/p): the combined
/// domain-plus-boundary norm the two-sided Hoelder inequality pairs up.
double combined_lp_norm(const RadialGridFunction& g, double p, double lambda);

/// Distribution function mu_g(t) = |{ |g| > t }| of the piecewise-linear
/// profile, as N-dimensional volume.  Superlevel sets are resolved exactly
/// per cell by inverting the linear interpolant.
double distribution_function(const RadialGridFunction& g, double t);

/// sup_t t^p mu_g(t), located on a log grid with local refinement.
double marcinkiewicz_sup(const RadialGridFunction& g, double p);

/// The quasi-norm convention (sup_t t^p mu_g(t))^(1/p); never exceeds the
/// L^p norm.
double marcinkiewicz_quasinorm(const RadialGridFunction& g, double p);

/// Boundary value |g(R)| and the trace L^p value |bd B_R|^(1/p) |g(R)| (a
/// radial function is constant on the sphere).
struct TraceReport {
  double boundary_value = 0.0;
  double trace_lp = 0.0;
};

TraceReport trace_report(const RadialGridFunction& g, double p);

/// L^q norm of the power source A/|x|^gamma on B_R; finite iff gamma q < N.
double power_source_lq_norm(int dimension, double radius, double amplitude,
                            double gamma, double q);

/// Everything the estimate checks need about one grid function, in one
/// bundle.  All entries are nonnegative, and the lp map obeys the inclusion
/// ||u||_a <= ||u||_b |Omega|^(1/a - 1/b) for a < b.
struct NormReport {
  std::map<double, double> lp;             ///< exponent -> L^p norm
  double gradient_l2_weighted = 0.0;       ///< weighted gradient energy
  double w1s = 0.0;
  double h1 = 0.0;
  double trace_value = 0.0;                ///< |u(R)|
  double trace_lp = 0.0;
  std::map<double, double> marcinkiewicz;  ///< index -> quasi-norm
};

NormReport norm_report(const RadialGridFunction& g,
                       std::span<const double> lp_exponents,
                       std::span<const double> marcinkiewicz_indices, double s,
                       double trace_p, double p_exp, double theta);

// ---------------------------------------------------------------------------
// Estimate-verification harnesses.  The constants in the underlying bounds
// are not explicit, so all three report data for boundedness/slope checks
// rather than comparing against a constant.
// ---------------------------------------------------------------------------

/// One row of the bounded-regime harness: B(max u) against ||f||_{L^q}.
struct LinftyEstimateRow {
  double amplitude = 0.0;
  bool exists = true;        ///< false rows are skipped (theta = 1 dichotomy)
  double B_of_max_u = 0.0;   ///< = v(0) for the closed form
  double source_lq = 0.0;
};

/// Requires q > N/2 (bounded regime) and f in L^q, i.e. gamma q < N.
/// Solutions come from the closed-form oracle.
std::vector<LinftyEstimateRow> estimate_harness_linfty(
    const RadialExampleSpec& base, std::span<const double> amplitudes, double q);

/// One row of the energy-regime harness:
/// ratio = ||u||^(1-theta)_{L^{q**(1-theta)}} / ||f||_{L^q}.
struct EnergyEstimateRow {
  double amplitude = 0.0;
  bool applicable = true;  ///< false for A = 0 (0/0 ratio)
  double u_norm = 0.0;     ///< ||u||_{L^{q**(1-theta)}}
  double ratio = 0.0;
  double h1 = 0.0;
};

struct EnergyEstimateTable {
  double q = 0.0;
  double norm_exponent = 0.0;  ///< q**(1-theta)
  std::vector<EnergyEstimateRow> rows;
};

/// Requires theta < 1 and (N, theta, q) in the energy regime; oracle
/// solutions sampled on a graded mesh with `mesh_cells` cells.
EnergyEstimateTable estimate_harness_energy(const RadialExampleSpec& base,
                                            std::span<const double> amplitudes,
                                            double q, int mesh_cells);

/// One row of the W^{1,s} harness (below the energy window).
struct W1sEstimateRow {
  double amplitude = 0.0;
  bool converged = false;
  double w1s_norm = 0.0;
  double source_lq = 0.0;
};

struct W1sEstimateTable {
  double s = 0.0;
  double q = 0.0;
  double loglog_slope = 0.0;  ///< slope of log ||u||_{W^{1,s}} vs log A
  std::vector<W1sEstimateRow> rows;
};

/// Requires (N, theta, q) in the non-energy regime and a power source with
/// gamma q < N.  Solutions come from the finite-difference solver, since no
/// closed form exists once gamma >= 2.  No pass/fail is attached to the
/// slope; the bound's explicit dependence on ||f|| is not known.
W1sEstimateTable estimate_harness_w1s(const ProblemSpec& base,
                                      std::span<const double> amplitudes,
                                      double q);

}  // namespace robin
