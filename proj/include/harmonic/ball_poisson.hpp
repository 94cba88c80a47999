#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

namespace harmonic::ball {

/// Product quadrature on S^2: Gauss-Legendre in mu = cos(phi), trapezoid in
/// theta. Exact for spherical harmonics below the resolution limit; weights
/// sum to the sphere area 4*pi.
class SphereQuadrature {
 public:
  SphereQuadrature(int n_phi = 128, int n_theta = 256);

  int n_phi() const { return static_cast<int>(mu_.size()); }
  int n_theta() const { return n_theta_; }
  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::VectorXd& mu_weights() const { return mu_weights_; }
  double theta(int j) const;
  double theta_weight() const;
  double total_weight() const;

  /// Unit node zeta(i, j) and its area weight.
  Eigen::Vector3d node(int i, int j) const;
  double weight(int i, int j) const;

 private:
  Eigen::VectorXd mu_;
  Eigen::VectorXd mu_weights_;
  int n_theta_;
};

/// Poisson kernel of the unit ball in R^3 against the area measure:
/// (1/4pi) (1 - |x|^2) / |x - zeta|^3; positive, unit mass. Requires |x| < 1.
double poisson_kernel_ball3(const Eigen::Vector3d& x, const Eigen::Vector3d& zeta);

using SphereMap = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

/// Harmonic extension of a sphere map into the ball: componentwise quadrature
/// of the kernel against the boundary values. Boundary values are sampled at
/// the quadrature nodes once, at construction.
class BallExtension3 {
 public:
  BallExtension3(const SphereMap& boundary, SphereQuadrature quad,
                 double max_radius = 0.8);

  Eigen::Vector3d operator()(const Eigen::Vector3d& x) const;

  const SphereQuadrature& quad() const { return quad_; }
  double max_radius() const { return max_radius_; }

 private:
  SphereQuadrature quad_;
  double max_radius_;
  Eigen::Matrix3Xd nodes_;    // unit quadrature nodes, one column each
  Eigen::Matrix3Xd values_;   // boundary values at the nodes
  Eigen::VectorXd weights_;   // area weights
};

inline Eigen::Vector3d extend_ball(const BallExtension3& ext, const Eigen::Vector3d& x) {
  return ext(x);
}

/// Verdict record for the axis fold F_3(0, 0, z) < F_3(0, 0, -z).
struct FoldReport {
  double p = 0.0;
  double z = 0.0;
  double F3_plus = 0.0;        // F_3(0, 0, +z)
  double F3_minus = 0.0;       // F_3(0, 0, -z)
  bool folded = false;         // F3_plus < F3_minus
  double axis_offset = 0.0;    // max |F_1|, |F_2| at the two probe points
  double convergence_change = 0.0;  // |F_3 change| when n_phi doubles
  bool resolution_flagged = false;  // convergence_change > 1e-4
};

FoldReport fold_check(double p, double z, const SphereQuadrature& quad,
                      double max_radius = 0.8);

struct AxisSample {
  double z;
  Eigen::Vector3d F;
};

/// F along the z-axis at the given parameters (all |z| <= max_radius).
std::vector<AxisSample> axis_profile(double p, const std::vector<double>& zs,
                                     const SphereQuadrature& quad,
                                     double max_radius = 0.8);

struct AxisCollision {
  double z1;
  double z2;
  double image_distance;
};

/// Searches the axis profile for two distinct parameters with (numerically)
/// equal images, by bisection on the two monotone flanks of a profile
/// extremum. Returns nullopt when the profile is monotone at this resolution.
std::optional<AxisCollision> find_collision(double p, const SphereQuadrature& quad,
                                            double tol, double max_radius = 0.8);

/// max |F| over the samples; below 1 for unit-norm boundary data by the
/// maximum principle.
double max_principle_check(const BallExtension3& ext,
                           const std::vector<Eigen::Vector3d>& samples);

}  // namespace harmonic::ball
