#include "harmonic/disk_poisson.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "harmonic/quadrature.hpp"

namespace harmonic::disk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("Poisson kernel requires 0 <= r < 1");
}

/// Trig-interpolation coefficients of uniform samples. The Nyquist mode of an
/// even count is kept as a cosine so the interpolant matches the samples.
std::map<int, Complex> interpolation_coeffs(const std::vector<Complex>& values) {
  const int m = static_cast<int>(values.size());
  std::map<int, Complex> coeffs;
  const int lo = -(m - 1) / 2;
  const int hi = m / 2;
  for (int n = lo; n <= hi; ++n) {
    Complex c(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
      const double angle = -kTwoPi * n * k / m;
      c += values[k] * Complex(std::cos(angle), std::sin(angle));
    }
    coeffs[n] = c / static_cast<double>(m);
  }
  return coeffs;
}

}  // namespace

double kernel_closed(double r, double theta) {
  check_radius(r);
  return (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(theta));
}

double kernel_series(double r, double theta, int terms) {
  check_radius(r);
  if (terms < 1) throw std::invalid_argument("kernel_series: terms must be >= 1");
  double sum = 1.0;
  double rn = 1.0;
  for (int n = 1; n <= terms; ++n) {
    rn *= r;
    sum += 2.0 * rn * std::cos(n * theta);
  }
  return sum;
}

double kernel_mass(double r, int nodes) {
  check_radius(r);
  if (nodes < 1) throw std::invalid_argument("kernel_mass: nodes must be >= 1");
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) sum += kernel_closed(r, kTwoPi * k / nodes);
  return sum / nodes;
}

BoundaryMap BoundaryMap::fourier(const std::map<int, Complex>& coeffs) {
  BoundaryMap map;
  Fourier f;
  for (const auto& [n, c] : coeffs)
    if (c != Complex(0.0, 0.0)) f.coeffs[n] = c;
  map.family_ = std::move(f);
  return map;
}

BoundaryMap BoundaryMap::sin_perturb_homeo(double a) {
  if (!(std::abs(a) < 1.0))
    throw std::invalid_argument("sin_perturb_homeo: |a| < 1 required for a strictly monotone lift");
  BoundaryMap map;
  map.family_ = SinPerturb{a};
  return map;
}

BoundaryMap BoundaryMap::sampled(const std::vector<Complex>& values) {
  if (values.size() < 8)
    throw std::invalid_argument("sampled boundary map requires at least 8 samples");
  BoundaryMap map;
  map.family_ = Sampled{interpolation_coeffs(values), static_cast<int>(values.size())};
  return map;
}

BoundaryMap BoundaryMap::sampled_from_stream(std::istream& in) {
  std::vector<Complex> values;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re)) continue;  // blank line
    if (!(row >> im))
      throw std::runtime_error("sampled boundary file: expected 're im' per line");
    values.emplace_back(re, im);
  }
  return sampled(values);
}

BoundaryMap BoundaryMap::sampled_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open boundary sample file: " + path);
  return sampled_from_stream(in);
}

BoundaryMap BoundaryMap::fourier_from_stream(std::istream& in) {
  std::map<int, Complex> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int n = 0;
    double re = 0.0, im = 0.0;
    if (!(row >> n)) continue;
    if (!(row >> re >> im))
      throw std::runtime_error("fourier boundary file: expected 'n re im' per line");
    coeffs[n] += Complex(re, im);
  }
  return fourier(coeffs);
}

BoundaryMap BoundaryMap::fourier_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fourier coefficient file: " + path);
  return fourier_from_stream(in);
}

Complex BoundaryMap::operator()(double t) const {
  Complex value(0.0, 0.0);
  if (const auto* f = std::get_if<Fourier>(&family_)) {
    for (const auto& [n, c] : f->coeffs)
      value += c * Complex(std::cos(n * t), std::sin(n * t));
  } else if (const auto* s = std::get_if<SinPerturb>(&family_)) {
    const double angle = t + s->a * std::sin(t);
    value = Complex(std::cos(angle), std::sin(angle));
  } else {
    const auto& interp = std::get<Sampled>(family_);
    const int nyquist = interp.count / 2;
    for (const auto& [n, c] : interp.coeffs) {
      if (interp.count % 2 == 0 && n == nyquist)
        value += c * std::cos(nyquist * t);
      else
        value += c * Complex(std::cos(n * t), std::sin(n * t));
    }
  }
  return conjugate_ ? std::conj(value) : value;
}

BoundaryMap BoundaryMap::conjugated() const {
  BoundaryMap map = *this;
  map.conjugate_ = !map.conjugate_;
  return map;
}

DiskExtension::DiskExtension(BoundaryMap boundary, int nodes, double max_radius)
    : boundary_(std::move(boundary)), nodes_(nodes), max_radius_(max_radius) {
  if (nodes_ < 64) throw std::invalid_argument("DiskExtension: nodes must be >= 64");
  if (!(max_radius_ > 0.0 && max_radius_ < 1.0))
    throw std::invalid_argument("DiskExtension: max_radius must lie in (0, 1)");
  samples_.resize(nodes_);
  for (int k = 0; k < nodes_; ++k) samples_[k] = boundary_(kTwoPi * k / nodes_);
}

Complex extend(const DiskExtension& ext, double r, double theta) {
  if (r < 0.0) throw std::domain_error("extend: negative radius");
  if (r > ext.max_radius())
    throw std::domain_error("resolution error: increase nodes or reduce radius");
  const int n = ext.nodes();
  const auto& samples = ext.boundary_samples();
  Complex sum(0.0, 0.0);
  for (int k = 0; k < n; ++k)
    sum += kernel_closed(r, theta - kTwoPi * k / n) * samples[k];
  return sum / static_cast<double>(n);
}

Complex boundary_value(const DiskExtension& ext, double theta) {
  return ext.boundary()(theta);
}

double mean_value_check(const DiskExtension& ext) {
  const Complex center = extend(ext, 0.0, 0.0);
  const Complex mean = ext.boundary_samples().mean();
  return std::abs(center - mean);
}

}  // namespace harmonic::disk
