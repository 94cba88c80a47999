#pragma once

#include <Eigen/Dense>

namespace harmonic::quadrature {

/// Gauss-Legendre rule on [-1, 1]: nodes ascending, weights summing to 2.
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace harmonic::quadrature
