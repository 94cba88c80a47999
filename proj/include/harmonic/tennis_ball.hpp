#pragma once

#include <Eigen/Dense>

namespace harmonic::tennis {

/// Fold parameter of the sphere homeomorphism family; the fold sharpens as
/// p grows.
struct FoldParams {
  double p;
  explicit FoldParams(double p_);
};

/// Polar/azimuth pair with the conversion x = sin(phi) cos(theta),
/// y = sin(phi) sin(theta), z = cos(phi).
struct SphericalCoord {
  double phi;    // [0, pi]
  double theta;  // [0, 2pi]

  static SphericalCoord from_cartesian(const Eigen::Vector3d& x);
  Eigen::Vector3d to_cartesian() const;
};

/// q(phi, p) = (1 - sin phi cos phi)^p on [0, pi/2]; lies in (0, 1] and equals
/// 1 at both endpoints.
double q(double phi, double p);

/// The azimuth component g_phi(theta) on [0, pi] x [0, 2pi]. Evaluated by
/// explicit reduction to the base branch
///   (pi/2) (2 theta / pi)^{q(phi, p)}   on [0, pi/2] x [0, pi/2]
/// through, in order:
///   theta in (pi, 2pi]  ->  pi + g_phi(theta - pi)
///   theta in (pi/2, pi] ->  pi - g_phi(pi - theta)
///   phi   in (pi/2, pi] ->  pi/2 - g_{pi-phi}(pi/2 - theta).
/// Strictly increasing in theta; fixes 0, pi and 2pi exactly.
double g(double phi, double theta, double p);

/// Inverse of theta -> g_phi(theta) by monotone bisection; throws after 200
/// iterations without |g - y| < tol.
double g_inverse(double phi, double y, double p, double tol = 1e-12);

/// The polar component h_phi(theta) on [0, pi] x [0, 2pi]. Base branch
///   pi (phi / pi)^{1 + p (pi - 4 theta)}   for theta in [0, pi/4],
/// reduced through
///   theta in (pi, 2pi]    ->  h_phi(theta - pi)
///   theta in (pi/2, pi]   ->  h_phi(pi - theta)
///   theta in (pi/4, pi/2] ->  pi - h_{pi-phi}(pi/2 - theta).
/// h_0 = 0, h_pi = pi, strictly increasing in phi for fixed theta.
double h(double phi, double theta, double p);

/// Inverse of phi -> h_phi(theta) at fixed theta by monotone bisection.
double h_inverse_phi(double theta, double y, double p, double tol = 1e-12);

/// k = (h_phi(g_phi(theta)), g_phi(theta)); fixes the lines {phi = 0} and
/// {phi = pi} pointwise.
SphericalCoord k(double phi, double theta, double p);

/// The sphere self-map: conjugation of k by spherical coordinates. Fixes the
/// poles exactly, is odd in x across {x = 0} and odd in y across {y = 0}.
Eigen::Vector3d f_sphere(const Eigen::Vector3d& x, double p);

/// S^{n-1} version, n >= 4: identity on the first n-3 coordinates, the sphere
/// map rescaled by R(x) = |(x_{n-2}, x_{n-1}, x_n)| on the last three.
Eigen::VectorXd f_star(const Eigen::VectorXd& x, double p, int n);

/// Grid residuals for the reflection identities of g, its boundary fixing,
/// and the agreement of the two g branch definitions at phi = pi/2.
struct IdentityReport {
  double g_reflect_pi;      // max |g_phi(pi - t) - (pi - g_phi(t))|, t in [0, pi]
  double g_reflect_3pi;     // max |g_phi(3pi - t) - (3pi - g_phi(t))|, t in [pi, 2pi]
  double g_fix_zero;        // max |g_phi(0)|
  double g_fix_two_pi;      // max |g_phi(2pi) - 2pi|
  double g_seam_half_pi;    // max over t of the two phi = pi/2 definitions' gap
  double worst() const;
};

IdentityReport identity_suite(double p, int phi_points = 33, int theta_points = 512);

}  // namespace harmonic::tennis
