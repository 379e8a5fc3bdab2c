#include "robin/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robin {

RadialGridFunction::RadialGridFunction(std::vector<double> nodes_in,
                                       std::vector<double> values_in,
                                       int dimension_in)
    : nodes(std::move(nodes_in)), values(std::move(values_in)),
      dimension(dimension_in) {
  if (dimension < 2) {
    throw std::invalid_argument("RadialGridFunction: dimension must be >= 2");
  }
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw std::invalid_argument(
        "RadialGridFunction: need matching node/value arrays with >= 2 entries");
  }
  if (!(nodes.front() >= 0.0)) {
    throw std::invalid_argument("RadialGridFunction: first node must be >= 0");
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i] < nodes[i + 1])) {
      throw std::invalid_argument(
          "RadialGridFunction: nodes must be strictly increasing");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("RadialGridFunction: values must be finite");
    }
  }
}

double RadialGridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> graded_mesh(double radius, int cells, double grading) {
  if (!(radius > 0.0)) throw std::invalid_argument("graded_mesh: radius must be > 0");
  if (cells < 1) throw std::invalid_argument("graded_mesh: need at least 1 cell");
  if (!(grading > 0.0)) throw std::invalid_argument("graded_mesh: grading must be > 0");
  std::vector<double> nodes(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    nodes[static_cast<std::size_t>(i)] =
        radius * std::pow(static_cast<double>(i) / cells, grading);
  }
  nodes.back() = radius;  // guard against pow round-off at i == cells
  return nodes;
}

}  // namespace robin
