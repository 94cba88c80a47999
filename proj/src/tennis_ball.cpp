#include "harmonic/tennis_ball.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harmonic::tennis {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_p(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("fold parameter p must be positive");
}

/// Base branch of g on [0, pi/2] x [0, pi/2].
double g_base(double phi, double theta, double p) {
  return kHalfPi * std::pow(2.0 * theta / kPi, q(phi, p));
}

/// Base branch of h on [0, pi] x [0, pi/4]; the exponent 1 + p(pi - 4 theta)
/// stays >= 1 there, so 0^exponent = 0 handles phi = 0.
double h_base(double phi, double theta, double p) {
  return kPi * std::pow(phi / kPi, 1.0 + p * (kPi - 4.0 * theta));
}

}  // namespace

FoldParams::FoldParams(double p_) : p(p_) { check_p(p); }

SphericalCoord SphericalCoord::from_cartesian(const Eigen::Vector3d& x) {
  const double z = std::clamp(x[2], -1.0, 1.0);
  double theta = std::atan2(x[1], x[0]);
  if (theta < 0.0) theta += kTwoPi;
  return {std::acos(z), theta};
}

Eigen::Vector3d SphericalCoord::to_cartesian() const {
  const double s = std::sin(phi);
  return {s * std::cos(theta), s * std::sin(theta), std::cos(phi)};
}

double q(double phi, double p) {
  check_p(p);
  if (!(phi >= 0.0 && phi <= kHalfPi + 1e-15))
    throw std::domain_error("q: phi must lie in [0, pi/2]");
  return std::pow(1.0 - std::sin(phi) * std::cos(phi), p);
}

double g(double phi, double theta, double p) {
  check_p(p);
  if (!(phi >= 0.0 && phi <= kPi)) throw std::domain_error("g: phi out of [0, pi]");
  if (!(theta >= 0.0 && theta <= kTwoPi))
    throw std::domain_error("g: theta out of [0, 2pi]");
  double shift = 0.0;
  if (theta > kPi) {
    shift = kPi;
    theta -= kPi;
  }
  bool reflected = false;
  if (theta > kHalfPi) {
    reflected = true;
    theta = kPi - theta;
  }
  const double base = (phi <= kHalfPi)
                          ? g_base(phi, theta, p)
                          : kHalfPi - g_base(kPi - phi, kHalfPi - theta, p);
  return shift + (reflected ? kPi - base : base);
}

double g_inverse(double phi, double y, double p, double tol) {
  if (!(y >= 0.0 && y <= kTwoPi))
    throw std::domain_error("g_inverse: target out of [0, 2pi]");
  // Endpoint targets are attained only at the endpoints once g plateaus for
  // large p; bisection alone cannot reach them.
  if (std::abs(g(phi, 0.0, p) - y) < tol) return 0.0;
  if (std::abs(g(phi, kTwoPi, p) - y) < tol) return kTwoPi;
  // Narrow all the way to a one-ulp bracket: plateaus of g make a residual
  // stop source-inaccurate, while per-ulp jumps of g stay ~ q * g * eps.
  double lo = 0.0, hi = kTwoPi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(phi, mid, p) < y ? lo : hi) = mid;
  }
  const double rlo = std::abs(g(phi, lo, p) - y);
  const double rhi = std::abs(g(phi, hi, p) - y);
  if (std::min(rlo, rhi) < tol) return rlo <= rhi ? lo : hi;
  throw std::runtime_error("g_inverse: bisection did not converge");
}

double h(double phi, double theta, double p) {
  check_p(p);
  if (!(phi >= 0.0 && phi <= kPi)) throw std::domain_error("h: phi out of [0, pi]");
  if (!(theta >= 0.0 && theta <= kTwoPi))
    throw std::domain_error("h: theta out of [0, 2pi]");
  if (theta > kPi) theta -= kPi;
  if (theta > kHalfPi) theta = kPi - theta;
  if (theta <= kPi / 4.0) return h_base(phi, theta, p);
  return kPi - h_base(kPi - phi, kHalfPi - theta, p);
}

double h_inverse_phi(double theta, double y, double p, double tol) {
  if (!(y >= 0.0 && y <= kPi))
    throw std::domain_error("h_inverse_phi: target out of [0, pi]");
  if (std::abs(h(0.0, theta, p) - y) < tol) return 0.0;
  if (std::abs(h(kPi, theta, p) - y) < tol) return kPi;
  double lo = 0.0, hi = kPi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (h(mid, theta, p) < y ? lo : hi) = mid;
  }
  const double rlo = std::abs(h(lo, theta, p) - y);
  const double rhi = std::abs(h(hi, theta, p) - y);
  if (std::min(rlo, rhi) < tol) return rlo <= rhi ? lo : hi;
  throw std::runtime_error("h_inverse_phi: bisection did not converge");
}

SphericalCoord k(double phi, double theta, double p) {
  const double azimuth = g(phi, theta, p);
  return {h(phi, azimuth, p), azimuth};
}

Eigen::Vector3d f_sphere(const Eigen::Vector3d& x, double p) {
  check_p(p);
  if (std::abs(x.norm() - 1.0) > 1e-9)
    throw std::domain_error("f_sphere: input must be a unit vector");
  // The z-axis is fixed pointwise; bypassing the coordinate round trip keeps
  // the poles bit-exact.
  if (x[0] == 0.0 && x[1] == 0.0) return {0.0, 0.0, x[2] > 0.0 ? 1.0 : -1.0};
  const SphericalCoord sc = SphericalCoord::from_cartesian(x);
  return k(sc.phi, sc.theta, p).to_cartesian();
}

Eigen::VectorXd f_star(const Eigen::VectorXd& x, double p, int n) {
  check_p(p);
  if (n < 4) throw std::invalid_argument("f_star: n must be >= 4");
  if (x.size() != n) throw std::invalid_argument("f_star: point length does not match n");
  if (std::abs(x.norm() - 1.0) > 1e-9)
    throw std::domain_error("f_star: input must be a unit vector");
  Eigen::VectorXd out = x;
  const Eigen::Vector3d tail = x.tail<3>();
  const double scale = tail.norm();
  if (scale == 0.0) {
    out.tail<3>().setZero();
    return out;
  }
  out.tail<3>() = scale * f_sphere(tail / scale, p);
  return out;
}

double IdentityReport::worst() const {
  double m = g_reflect_pi;
  m = std::max(m, g_reflect_3pi);
  m = std::max(m, g_fix_zero);
  m = std::max(m, g_fix_two_pi);
  m = std::max(m, g_seam_half_pi);
  return m;
}

IdentityReport identity_suite(double p, int phi_points, int theta_points) {
  check_p(p);
  if (phi_points < 16 || theta_points < 16)
    throw std::invalid_argument("identity_suite: grid must have >= 16 points per axis");
  IdentityReport report{0.0, 0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < phi_points; ++i) {
    const double phi = kPi * i / (phi_points - 1);
    report.g_fix_zero = std::max(report.g_fix_zero, std::abs(g(phi, 0.0, p)));
    report.g_fix_two_pi =
        std::max(report.g_fix_two_pi, std::abs(g(phi, kTwoPi, p) - kTwoPi));
    for (int j = 0; j < theta_points; ++j) {
      const double t_low = kPi * j / (theta_points - 1);
      report.g_reflect_pi =
          std::max(report.g_reflect_pi,
                   std::abs(g(phi, kPi - t_low, p) - (kPi - g(phi, t_low, p))));
      const double t_high = kPi + kPi * j / (theta_points - 1);
      report.g_reflect_3pi =
          std::max(report.g_reflect_3pi,
                   std::abs(g(phi, 3.0 * kPi - t_high, p) -
                            (3.0 * kPi - g(phi, t_high, p))));
    }
  }
  // Agreement of the two branch definitions of g at the seam phi = pi/2.
  for (int j = 0; j < theta_points; ++j) {
    const double t = kHalfPi * j / (theta_points - 1);
    const double from_below = g_base(kHalfPi, t, p);
    const double from_above = kHalfPi - g_base(kPi - kHalfPi, kHalfPi - t, p);
    report.g_seam_half_pi =
        std::max(report.g_seam_half_pi, std::abs(from_below - from_above));
  }
  return report;
}

}  // namespace harmonic::tennis
