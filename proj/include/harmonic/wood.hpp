#pragma once

#include <Eigen/Dense>

#include <vector>

#include "harmonic/diffops.hpp"

namespace harmonic::wood {

/// The harmonic bijection of R^3 whose Jacobian vanishes on the plane {x = 0}:
///   f(x, y, z) = (x^3 - 3 x z^2 + y z,  y - 3 x z,  z).
Eigen::Vector3d eval3(double x, double y, double z);

/// Closed-form inverse: x = cbrt(a - b c), z = c, y = b + 3 x c.
Eigen::Vector3d invert3(double a, double b, double c);

/// Closed-form Jacobian determinant 3 x^2 (exactly zero on {x = 0}).
double jacobian_det3(double x, double y, double z);

/// R^n version, n >= 3: identity on the first n-3 coordinates, the R^3 map on
/// the last three. Jacobian determinant is 3 x_{n-2}^2.
Eigen::VectorXd evalN(const Eigen::VectorXd& x, int n);

struct HarmonicityReport {
  Eigen::VectorXd max_abs_laplacian;  // one entry per component
  double worst() const { return max_abs_laplacian.maxCoeff(); }
};

/// Componentwise max |finite-difference Laplacian| over the samples.
HarmonicityReport harmonicity_report(
    int n, const std::vector<Eigen::VectorXd>& samples,
    const diffops::DiffConfig& cfg = diffops::DiffConfig::second_order());

}  // namespace harmonic::wood
