#include "harmonic/ball_poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "harmonic/quadrature.hpp"
#include "harmonic/tennis_ball.hpp"

namespace harmonic::ball {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

BallExtension3 fold_extension(double p, const SphereQuadrature& quad,
                              double max_radius) {
  return BallExtension3([p](const Eigen::Vector3d& zeta) {
    return tennis::f_sphere(zeta, p);
  }, quad, max_radius);
}

}  // namespace

SphereQuadrature::SphereQuadrature(int n_phi, int n_theta) : n_theta_(n_theta) {
  if (n_phi < 32) throw std::invalid_argument("SphereQuadrature: n_phi must be >= 32");
  if (n_theta_ < 64)
    throw std::invalid_argument("SphereQuadrature: n_theta must be >= 64");
  auto rule = quadrature::gauss_legendre(n_phi);
  mu_ = std::move(rule.nodes);
  mu_weights_ = std::move(rule.weights);
  if (std::abs(total_weight() - kFourPi) > 1e-12 * kFourPi)
    throw std::runtime_error("SphereQuadrature: weights do not sum to 4*pi");
}

// Midpoint angles: the sphere maps of interest concentrate their azimuthal
// variation at quarter-turn seams, and sampling exactly on a seam injects an
// O(1/n) spike term into the trapezoid sum.
double SphereQuadrature::theta(int j) const { return kTwoPi * (j + 0.5) / n_theta_; }

double SphereQuadrature::theta_weight() const { return kTwoPi / n_theta_; }

double SphereQuadrature::total_weight() const {
  return mu_weights_.sum() * theta_weight() * n_theta_;
}

Eigen::Vector3d SphereQuadrature::node(int i, int j) const {
  const double m = mu_[i];
  const double s = std::sqrt(std::max(0.0, 1.0 - m * m));
  const double t = theta(j);
  return {s * std::cos(t), s * std::sin(t), m};
}

double SphereQuadrature::weight(int i, int j) const {
  (void)j;
  return mu_weights_[i] * theta_weight();
}

double poisson_kernel_ball3(const Eigen::Vector3d& x, const Eigen::Vector3d& zeta) {
  const double r2 = x.squaredNorm();
  if (!(r2 < 1.0)) throw std::domain_error("poisson_kernel_ball3: |x| < 1 required");
  const double d = (x - zeta).norm();
  return (1.0 - r2) / (kFourPi * d * d * d);
}

BallExtension3::BallExtension3(const SphereMap& boundary, SphereQuadrature quad,
                               double max_radius)
    : quad_(std::move(quad)), max_radius_(max_radius) {
  if (!(max_radius_ > 0.0 && max_radius_ < 1.0))
    throw std::invalid_argument("BallExtension3: max_radius must lie in (0, 1)");
  const int count = quad_.n_phi() * quad_.n_theta();
  nodes_.resize(3, count);
  values_.resize(3, count);
  weights_.resize(count);
  int col = 0;
  for (int i = 0; i < quad_.n_phi(); ++i) {
    for (int j = 0; j < quad_.n_theta(); ++j, ++col) {
      const Eigen::Vector3d zeta = quad_.node(i, j);
      nodes_.col(col) = zeta;
      values_.col(col) = boundary(zeta);
      weights_[col] = quad_.weight(i, j);
    }
  }
}

Eigen::Vector3d BallExtension3::operator()(const Eigen::Vector3d& x) const {
  if (x.norm() > max_radius_)
    throw std::domain_error("ball extension: evaluation beyond max_radius");
  const double r2 = x.squaredNorm();
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  const int count = static_cast<int>(weights_.size());
  for (int c = 0; c < count; ++c) {
    const double d2 = (x - nodes_.col(c)).squaredNorm();
    const double kernel = (1.0 - r2) / (kFourPi * d2 * std::sqrt(d2));
    sum += weights_[c] * kernel * values_.col(c);
  }
  return sum;
}

FoldReport fold_check(double p, double z, const SphereQuadrature& quad,
                      double max_radius) {
  if (!(z > 0.0 && z < 1.0))
    throw std::invalid_argument("fold_check: z must lie in (0, 1)");
  if (z > max_radius) throw std::domain_error("fold_check: z exceeds max_radius");

  const BallExtension3 ext = fold_extension(p, quad, max_radius);
  const Eigen::Vector3d plus = ext({0.0, 0.0, z});
  const Eigen::Vector3d minus = ext({0.0, 0.0, -z});

  FoldReport report;
  report.p = p;
  report.z = z;
  report.F3_plus = plus[2];
  report.F3_minus = minus[2];
  report.folded = report.F3_plus < report.F3_minus;
  report.axis_offset = std::max({std::abs(plus[0]), std::abs(plus[1]),
                                 std::abs(minus[0]), std::abs(minus[1])});

  const SphereQuadrature refined(2 * quad.n_phi(), quad.n_theta());
  const BallExtension3 fine = fold_extension(p, refined, max_radius);
  report.convergence_change =
      std::max(std::abs(fine({0.0, 0.0, z})[2] - report.F3_plus),
               std::abs(fine({0.0, 0.0, -z})[2] - report.F3_minus));
  report.resolution_flagged = report.convergence_change > 1e-4;
  return report;
}

std::vector<AxisSample> axis_profile(double p, const std::vector<double>& zs,
                                     const SphereQuadrature& quad,
                                     double max_radius) {
  for (double z : zs)
    if (std::abs(z) > max_radius)
      throw std::domain_error("axis_profile: |z| exceeds max_radius");
  const BallExtension3 ext = fold_extension(p, quad, max_radius);
  std::vector<AxisSample> profile;
  profile.reserve(zs.size());
  for (double z : zs) profile.push_back({z, ext({0.0, 0.0, z})});
  return profile;
}

std::optional<AxisCollision> find_collision(double p, const SphereQuadrature& quad,
                                            double tol, double max_radius) {
  const BallExtension3 ext = fold_extension(p, quad, max_radius);
  auto f3 = [&](double z) { return ext({0.0, 0.0, z})[2]; };

  const int count = 161;
  std::vector<double> zs(count), values(count);
  for (int i = 0; i < count; ++i) {
    zs[i] = -max_radius + 2.0 * max_radius * i / (count - 1);
    values[i] = f3(zs[i]);
  }

  // Locate an interior local maximum of the profile; a monotone profile has
  // none and carries no collision at this resolution.
  int peak = -1;
  for (int i = 1; i + 1 < count; ++i) {
    if (values[i] > values[i - 1] && values[i] >= values[i + 1]) {
      peak = i;
      break;
    }
  }
  if (peak < 0) return std::nullopt;

  // Pick a level attained on both flanks of the peak.
  const int last = count - 1;
  const double left_floor = values[0];
  double right_min = values[peak];
  for (int i = peak; i <= last; ++i) right_min = std::min(right_min, values[i]);
  const double level = 0.5 * (values[peak] + std::max(left_floor, right_min));
  if (!(level > left_floor && level > right_min && level < values[peak]))
    return std::nullopt;

  auto bisect = [&](double lo, double hi, bool increasing) {
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double value = f3(mid);
      if (std::abs(value - level) < 0.25 * tol) return mid;
      if ((value < level) == increasing)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  // Crossing on each side of the peak (the level checks above guarantee one).
  int left = peak;
  while (left > 0 && values[left] > level) --left;
  if (values[left] > level) return std::nullopt;
  const double z1 = bisect(zs[left], zs[peak], true);

  int right = peak;
  while (right < last && values[right] > level) ++right;
  if (values[right] > level) return std::nullopt;
  const double z2 = bisect(zs[peak], zs[right], false);

  AxisCollision collision;
  collision.z1 = z1;
  collision.z2 = z2;
  collision.image_distance =
      (ext({0.0, 0.0, z1}) - ext({0.0, 0.0, z2})).norm();
  if (collision.image_distance >= tol) return std::nullopt;
  if (std::abs(z1 - z2) <= 1e-3) return std::nullopt;
  return collision;
}

double max_principle_check(const BallExtension3& ext,
                           const std::vector<Eigen::Vector3d>& samples) {
  double worst = 0.0;
  for (const auto& x : samples) worst = std::max(worst, ext(x).norm());
  return worst;
}

}  // namespace harmonic::ball
