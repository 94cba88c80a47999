#pragma once

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace harmonic::disk {

using Complex = std::complex<double>;

/// Closed-form Poisson kernel P_r(theta) = (1 - r^2) / (1 + r^2 - 2 r cos theta).
/// Strictly positive on 0 <= r < 1; throws for r outside [0, 1).
double kernel_closed(double r, double theta);

/// Symmetric partial sum of the kernel series sum_{|n| <= terms} r^|n| e^{i n theta}
/// (real by symmetry). The tail is bounded by the geometric remainder in r.
double kernel_series(double r, double theta, int terms);

/// (1/2pi) trapezoid integral of P_r over [0, 2pi); equals 1 up to aliasing r^nodes.
double kernel_mass(double r, int nodes);

/// Boundary data on the unit circle, t in [0, 2pi):
///  - a finite Fourier polynomial sum c_n e^{int},
///  - the circle homeomorphism t -> exp(i(t + a sin t)), |a| < 1,
///  - uniform samples starting at t = 0, evaluated by trigonometric interpolation.
class BoundaryMap {
 public:
  static BoundaryMap fourier(const std::map<int, Complex>& coeffs);
  static BoundaryMap sin_perturb_homeo(double a);
  static BoundaryMap sampled(const std::vector<Complex>& values);

  /// One "re im" pair per line, uniformly spaced from t = 0.
  static BoundaryMap sampled_from_file(const std::string& path);
  static BoundaryMap sampled_from_stream(std::istream& in);
  /// One "n re im" triple per line.
  static BoundaryMap fourier_from_file(const std::string& path);
  static BoundaryMap fourier_from_stream(std::istream& in);

  Complex operator()(double t) const;

  /// Same family, values conjugated pointwise (reverses orientation of
  /// circle homeomorphisms).
  BoundaryMap conjugated() const;

 private:
  BoundaryMap() = default;

  struct Fourier {
    std::map<int, Complex> coeffs;
  };
  struct SinPerturb {
    double a;
  };
  struct Sampled {
    std::map<int, Complex> coeffs;  // trig-interpolation coefficients
    int count;
  };

  std::variant<Fourier, SinPerturb, Sampled> family_;
  bool conjugate_ = false;
};

/// Harmonic extension of a boundary map into the disk, evaluated by the
/// trapezoid rule on `nodes` uniform circle points. Radii above max_radius
/// are rejected: the kernel peak has width O(1 - r) and undersampling it
/// silently destroys accuracy (guidance: nodes >= 64 / (1 - r)).
class DiskExtension {
 public:
  DiskExtension(BoundaryMap boundary, int nodes = 512, double max_radius = 0.95);

  const BoundaryMap& boundary() const { return boundary_; }
  int nodes() const { return nodes_; }
  double max_radius() const { return max_radius_; }
  const Eigen::VectorXcd& boundary_samples() const { return samples_; }

 private:
  BoundaryMap boundary_;
  int nodes_;
  double max_radius_;
  Eigen::VectorXcd samples_;  // boundary at the quadrature nodes
};

/// F(r e^{i theta}) = (1/2pi) int P_r(theta - t) f(e^{it}) dt by trapezoid
/// quadrature on the extension's nodes.
Complex extend(const DiskExtension& ext, double r, double theta);

/// Exact boundary values (the r = 1 limit is not evaluated through the kernel).
Complex boundary_value(const DiskExtension& ext, double theta);

/// |F(0) - boundary mean| with both sides computed on the same node set.
double mean_value_check(const DiskExtension& ext);

}  // namespace harmonic::disk
