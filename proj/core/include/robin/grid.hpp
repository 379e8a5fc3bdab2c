#pragma once

#include <cstddef>
#include <vector>

namespace robin {

/// Scalar radial field sampled on nodes 0 <= r_0 < r_1 < ... < r_M = R.
/// The space dimension N is kept with the samples because every integral over
/// the ball carries the r^(N-1) volume weight.  A first node r_0 > 0 means
/// the field is only known on the shell [r_0, R] (profiles with a singular
/// core are stored that way).
struct RadialGridFunction {
  std::vector<double> nodes;
  std::vector<double> values;
  int dimension = 3;

  RadialGridFunction() = default;
  RadialGridFunction(std::vector<double> nodes_in, std::vector<double> values_in,
                     int dimension_in);

  std::size_t size() const noexcept { return nodes.size(); }
  double radius() const { return nodes.back(); }
  double max_abs() const;
};

/// Nodes r_i = R (i/M)^g for i = 0..M.  g = 1 is uniform; g > 1 clusters
/// nodes at the origin, which is where power sources are singular.
std::vector<double> graded_mesh(double radius, int cells, double grading);

}  // namespace robin
