#pragma once

#include "robin/grid.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace robin {

/// f(r) = amplitude / r^gamma with gamma in [0, N).
struct PowerSource {
  double amplitude = 0.0;
  double gamma = 0.0;
};

/// f given by samples (radii, values); interpolated linearly onto the mesh,
/// clamped outside the sampled range.
struct TabulatedSource {
  std::vector<double> radii;
  std::vector<double> values;
};

using Source = std::variant<PowerSource, TabulatedSource>;

struct MeshSpec {
  int cells = 256;                ///< M >= 16; nodes are r_i = R (i/M)^g
  std::optional<double> grading;  ///< default: 2 for power gamma >= 1, else 1
};

struct IterationSpec {
  int max_steps = 500;
  double damping = 0.7;      ///< in (0, 1]
  double tolerance = 1e-10;  ///< on the relative max-norm update
};

/// Full description of one nonlinear radial Robin solve for
///   -div(b(|u|) grad u) = f  on B_R,   du/dnu + beta u = 0,
/// with b(s) = (1+s)^(-theta) truncated at level n inside the coefficient:
/// the linearized problems use b(|T_n(u)|), which keeps them uniformly
/// elliptic with ellipticity constant at least (1+n)^(-theta).
struct ProblemSpec {
  int dimension = 3;
  double radius = 1.0;
  double beta = 1.0;
  double theta = 1.0;  ///< in [0, 1]; 0 switches the coefficient off (b == 1)
  Source source;
  MeshSpec mesh;
  double truncation_level = 1e3;  ///< n > 0
  IterationSpec iteration;
};

void validate(const ProblemSpec& spec);
double resolved_grading(const ProblemSpec& spec);
std::vector<double> mesh_nodes(const ProblemSpec& spec);

/// Symmetric tridiagonal system over nodes 0..M; lower[i] couples row i to
/// row i-1 (lower[0] and upper[M] are unused and kept at zero).
struct TridiagonalSystem {
  std::vector<double> diag;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> rhs;
};

/// Conservative discretization of -(r^(N-1) b u')' = r^(N-1) f with the
/// coefficient frozen at `frozen`:
///  - flux stiffness per cell uses the exact cell integral of r^(N-1) and b
///    evaluated at the truncated midpoint value (average of the two frozen
///    nodal values),
///  - zero flux at r = 0, Robin row beta R^(N-1) b(|T_n(u_M)|) u_M at r = R,
///  - loads are exact hat-function integrals of f r^(N-1), so the rows
///    coincide with the P1 weak form that weak_residual() evaluates.
TridiagonalSystem assemble_linear_system(const ProblemSpec& spec,
                                         const RadialGridFunction& frozen);

/// Thomas algorithm.  Throws if a pivot degenerates, which for these systems
/// can only happen if b underflows to zero.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

/// Why a non-converged iteration stalled, judged from the sup-norm history:
/// monotone growth over the final stretch points at a nonexistence regime,
/// anything else suggests reducing the damping factor.
enum class StallDiagnosis { none, oscillation, blow_up };

struct SolveReport {
  RadialGridFunction solution;
  RadialGridFunction v_equivalent;  ///< B applied nodewise (odd extension)
  int picard_iterations = 0;
  double final_update_norm = 0.0;   ///< relative max-norm of the last update
  bool converged = false;
  bool truncation_active = false;   ///< max|u| reached the truncation level
  double weak_residual = 0.0;       ///< against the untruncated problem
  StallDiagnosis diagnosis = StallDiagnosis::none;
  std::vector<double> sup_history;  ///< max|u_k| after every Picard step
};

/// Damped frozen-coefficient (Picard) iteration started from u = 0:
///   u_{k+1} = (1-d) u_k + d solve(assemble(spec, u_k)),
/// stopped when the relative max-norm update drops below the tolerance.
SolveReport picard_solve(const ProblemSpec& spec);

/// Re-solve at each truncation level (strictly increasing).  In existence
/// regimes max|u_n| stabilizes once the level clears the solution; when no
/// bounded solution exists it keeps growing with the level.
std::vector<SolveReport> truncation_sweep(const ProblemSpec& spec,
                                          std::span<const double> levels);

/// Normalized weak-form residual of `candidate` against the untruncated
/// problem: the maximum over the hat-function test basis of
///   | int b(|u|) u' phi' r^(N-1) dr
///     + beta b(|u(R)|) u(R) phi(R) R^(N-1) - int f phi r^(N-1) dr |
/// divided by the weighted gradient norm of the test function.  Quadrature
/// matches assemble_linear_system, so a converged solve with inactive
/// truncation scores at the iteration tolerance.  `include_robin_row = false`
/// drops the boundary row; that variant checks interior equations only and
/// is what the change-of-variable diagnostic for v = B(u) needs, since v
/// obeys a different boundary condition.
double weak_residual(const ProblemSpec& spec, const RadialGridFunction& candidate,
                     bool include_robin_row = true);

}  // namespace robin
