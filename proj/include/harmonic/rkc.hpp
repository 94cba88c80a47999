#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "harmonic/diffops.hpp"
#include "harmonic/disk_poisson.hpp"

namespace harmonic::rkc {

using Complex = std::complex<double>;

/// Orientation-preserving circle homeomorphism given by a strictly increasing
/// lift psi on [0, 2pi] with psi(2pi) = psi(0) + 2pi.
class CircleHomeo {
 public:
  static CircleHomeo identity();
  static CircleHomeo sin_perturb(double a);  // psi(t) = t + a sin t, |a| < 1
  /// Knots (t_i, psi_i) with t_0 = 0, t_last = 2pi; strictly increasing in
  /// both coordinates and psi_last = psi_0 + 2pi.
  static CircleHomeo piecewise_linear(std::vector<std::pair<double, double>> knots);

  double lift(double t) const;

  /// Boundary map e^{i psi(t)}. Closed-form families evaluate directly; the
  /// piecewise-linear family is sampled on `samples` uniform nodes.
  disk::BoundaryMap boundary(int samples = 1024) const;

 private:
  CircleHomeo() = default;
  enum class Family { Identity, SinPerturb, PiecewiseLinear } family_ = Family::Identity;
  double a_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
  void validate() const;
};

struct ExtensionConfig {
  int nodes = 1024;
  double max_radius = 0.95;
};

struct GridSpec {
  int radial = 24;
  int angular = 96;
  double max_radius = 0.9;
};

enum class Verdict { ConsistentWithInjective, ViolationFound };

inline const char* to_string(Verdict v) {
  return v == Verdict::ConsistentWithInjective ? "consistent-with-injective"
                                               : "violation-found";
}

struct CollisionPair {
  Eigen::Vector2d source_a;
  Eigen::Vector2d source_b;
  double image_distance = 0.0;
};

/// Injectivity evidence at a fixed grid resolution: a univalence claim is
/// never made beyond "no violation found at this resolution and tolerance".
struct InjectivityReport {
  GridSpec grid;
  double tol = 1e-6;
  double min_jacobian = 0.0;
  Eigen::Vector2d min_jacobian_at = Eigen::Vector2d::Zero();
  /// min over distinct grid points of |F(z1) - F(z2)| / |z1 - z2|.
  double min_image_separation = 0.0;
  std::optional<CollisionPair> collision;
  Verdict verdict = Verdict::ConsistentWithInjective;
};

/// Evaluates the harmonic extension of e^{i psi(t)} and its finite-difference
/// Jacobian over a polar grid; collisions are detected with a spatial hash of
/// cell size tol over the image points.
InjectivityReport rkc_scan(const CircleHomeo& homeo, const ExtensionConfig& ext_cfg,
                           const GridSpec& grid, double tol = 1e-6);

/// Same scan for an arbitrary boundary map (callers assert it is a circle map).
InjectivityReport rkc_scan(const disk::BoundaryMap& boundary,
                           const ExtensionConfig& ext_cfg, const GridSpec& grid,
                           double tol = 1e-6);

/// g_z(0) = (1/2pi) int_0^{2pi} g(e^{it}) e^{-it} dt by trapezoid quadrature.
Complex hz_at_zero(const disk::BoundaryMap& g, int nodes);

struct LemmaReport {
  Complex hz;          // g_z(0)
  double im_hz;        // Im g_z(0) = -(1/2pi) int_0^pi (g(e^{it}) - g(e^{-it})) sin t dt
  bool nonzero;        // |Im g_z(0)| > tol
};

/// Verifies the hypothesis g(e^{it}) - g(e^{-it}) >= 0 on [0, pi] (strictly
/// positive somewhere) on the node grid, then reports Im g_z(0). Throws,
/// naming the offending t, when the hypothesis fails.
LemmaReport lemma_sign_check(const disk::BoundaryMap& g, int nodes, double tol = 1e-9);

/// |grad (a Re F + b Im F)| at z0 by central differences.
double directional_degeneracy_probe(const disk::DiskExtension& ext, Complex z0,
                                    double a, double b,
                                    const diffops::DiffConfig& cfg = {});

/// Winding number of a closed polyline about z0 (exact for polylines).
/// Throws when z0 lies within tol of a segment.
int winding_number(const std::vector<Complex>& curve, Complex z0, double tol = 1e-12);

}  // namespace harmonic::rkc
