#include "harmonic/rkc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace harmonic::rkc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

CircleHomeo CircleHomeo::identity() {
  CircleHomeo h;
  h.family_ = Family::Identity;
  return h;
}

CircleHomeo CircleHomeo::sin_perturb(double a) {
  if (!(std::abs(a) < 1.0))
    throw std::invalid_argument("CircleHomeo::sin_perturb: |a| < 1 required");
  CircleHomeo h;
  h.family_ = Family::SinPerturb;
  h.a_ = a;
  return h;
}

CircleHomeo CircleHomeo::piecewise_linear(std::vector<std::pair<double, double>> knots) {
  CircleHomeo h;
  h.family_ = Family::PiecewiseLinear;
  h.knots_ = std::move(knots);
  h.validate();
  return h;
}

void CircleHomeo::validate() const {
  if (family_ != Family::PiecewiseLinear) return;
  if (knots_.size() < 2)
    throw std::invalid_argument("piecewise_linear: need at least two knots");
  if (knots_.front().first != 0.0 || std::abs(knots_.back().first - kTwoPi) > 1e-12)
    throw std::invalid_argument("piecewise_linear: knots must span [0, 2pi]");
  if (std::abs(knots_.back().second - knots_.front().second - kTwoPi) > 1e-12)
    throw std::invalid_argument("piecewise_linear: lift must increase by exactly 2pi");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i].first > knots_[i - 1].first) ||
        !(knots_[i].second > knots_[i - 1].second))
      throw std::invalid_argument("piecewise_linear: knots must be strictly increasing");
  }
  // Strict monotonicity of the lift on the standard verification grid.
  const int grid = 4096;
  double prev = lift(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double t = kTwoPi * i / grid;
    const double cur = lift(t);
    if (!(cur > prev))
      throw std::invalid_argument("piecewise_linear: lift not strictly increasing on grid");
    prev = cur;
  }
}

double CircleHomeo::lift(double t) const {
  switch (family_) {
    case Family::Identity:
      return t;
    case Family::SinPerturb:
      // psi(2pi) = psi(0) + 2pi holds structurally.
      if (t == kTwoPi) return kTwoPi;
      return t + a_ * std::sin(t);
    case Family::PiecewiseLinear: {
      if (t <= knots_.front().first) return knots_.front().second;
      if (t >= knots_.back().first) return knots_.back().second;
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (t <= knots_[i].first) {
          const auto& [t0, p0] = knots_[i - 1];
          const auto& [t1, p1] = knots_[i];
          return p0 + (p1 - p0) * (t - t0) / (t1 - t0);
        }
      }
      return knots_.back().second;
    }
  }
  return t;
}

disk::BoundaryMap CircleHomeo::boundary(int samples) const {
  switch (family_) {
    case Family::Identity:
      return disk::BoundaryMap::fourier({{1, Complex(1.0, 0.0)}});
    case Family::SinPerturb:
      return disk::BoundaryMap::sin_perturb_homeo(a_);
    case Family::PiecewiseLinear: {
      std::vector<Complex> values(samples);
      for (int k = 0; k < samples; ++k) {
        const double psi = lift(kTwoPi * k / samples);
        values[k] = Complex(std::cos(psi), std::sin(psi));
      }
      return disk::BoundaryMap::sampled(values);
    }
  }
  throw std::logic_error("unreachable");
}

InjectivityReport rkc_scan(const CircleHomeo& homeo, const ExtensionConfig& ext_cfg,
                           const GridSpec& grid, double tol) {
  return rkc_scan(homeo.boundary(ext_cfg.nodes), ext_cfg, grid, tol);
}

InjectivityReport rkc_scan(const disk::BoundaryMap& boundary,
                           const ExtensionConfig& ext_cfg, const GridSpec& grid,
                           double tol) {
  if (grid.max_radius > ext_cfg.max_radius)
    throw std::invalid_argument("rkc_scan: grid radius exceeds extension max_radius");
  if (grid.radial < 1 || grid.angular < 1)
    throw std::invalid_argument("rkc_scan: empty grid");

  const disk::DiskExtension ext(boundary, ext_cfg.nodes, ext_cfg.max_radius);
  auto eval = [&](double x, double y) {
    return disk::extend(ext, std::hypot(x, y), std::atan2(y, x));
  };
  auto real_map = [&](const Eigen::VectorXd& w) {
    const Complex value = eval(w[0], w[1]);
    return Eigen::Vector2d(value.real(), value.imag());
  };

  InjectivityReport report;
  report.grid = grid;
  report.tol = tol;

  const int count = grid.radial * grid.angular;
  std::vector<Eigen::Vector2d> sources;
  std::vector<Complex> images;
  sources.reserve(count);
  images.reserve(count);

  const diffops::DiffConfig fd = diffops::DiffConfig::first_order();
  double min_jac = std::numeric_limits<double>::infinity();
  Eigen::Vector2d min_at = Eigen::Vector2d::Zero();
  for (int i = 0; i < grid.radial; ++i) {
    const double r = grid.max_radius * (i + 1) / grid.radial;
    for (int j = 0; j < grid.angular; ++j) {
      const double theta = kTwoPi * j / grid.angular;
      const Eigen::Vector2d z(r * std::cos(theta), r * std::sin(theta));
      sources.push_back(z);
      images.push_back(eval(z[0], z[1]));
      const double det = diffops::fd_jacobian(real_map, z, fd).determinant();
      if (det < min_jac) {
        min_jac = det;
        min_at = z;
      }
    }
  }
  report.min_jacobian = min_jac;
  report.min_jacobian_at = min_at;

  // Collision detection: spatial hash over image points, cell size = tol.
  struct CellHash {
    std::size_t operator()(const std::pair<long long, long long>& c) const {
      return std::hash<long long>()(c.first * 1000003LL + c.second);
    }
  };
  std::unordered_map<std::pair<long long, long long>, std::vector<int>, CellHash> cells;
  auto cell_of = [tol](const Complex& w) {
    return std::make_pair(static_cast<long long>(std::floor(w.real() / tol)),
                          static_cast<long long>(std::floor(w.imag() / tol)));
  };
  for (int idx = 0; idx < count; ++idx) {
    const auto c = cell_of(images[idx]);
    for (long long dx = -1; dx <= 1 && !report.collision; ++dx) {
      for (long long dy = -1; dy <= 1 && !report.collision; ++dy) {
        const auto it = cells.find({c.first + dx, c.second + dy});
        if (it == cells.end()) continue;
        for (int other : it->second) {
          const double dist = std::abs(images[idx] - images[other]);
          if (dist < tol) {
            report.collision = CollisionPair{sources[other], sources[idx], dist};
            break;
          }
        }
      }
    }
    cells[c].push_back(idx);
  }

  double min_sep = std::numeric_limits<double>::infinity();
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const double dz = (sources[a] - sources[b]).norm();
      const double dw = std::abs(images[a] - images[b]);
      min_sep = std::min(min_sep, dw / dz);
    }
  }
  report.min_image_separation = min_sep;

  report.verdict = (report.min_jacobian < -tol || report.collision)
                       ? Verdict::ViolationFound
                       : Verdict::ConsistentWithInjective;
  return report;
}

Complex hz_at_zero(const disk::BoundaryMap& g, int nodes) {
  if (nodes < 64) throw std::invalid_argument("hz_at_zero: nodes must be >= 64");
  Complex sum(0.0, 0.0);
  for (int k = 0; k < nodes; ++k) {
    const double t = kTwoPi * k / nodes;
    sum += g(t) * Complex(std::cos(t), -std::sin(t));
  }
  return sum / static_cast<double>(nodes);
}

LemmaReport lemma_sign_check(const disk::BoundaryMap& g, int nodes, double tol) {
  if (nodes < 64) throw std::invalid_argument("lemma_sign_check: nodes must be >= 64");
  // Hypothesis on the node grid, pairing t_k with 2pi - t_k exactly.
  double max_diff = 0.0;
  for (int k = 1; k < (nodes + 1) / 2; ++k) {
    const double t = kTwoPi * k / nodes;
    const double diff = g(t).real() - g(kTwoPi - t).real();
    if (diff < -1e-12) {
      std::ostringstream msg;
      msg << "lemma hypothesis violated: g(e^{it}) - g(e^{-it}) = " << diff
          << " < 0 at t = " << t;
      throw std::domain_error(msg.str());
    }
    max_diff = std::max(max_diff, diff);
  }
  if (max_diff <= tol)
    throw std::domain_error(
        "lemma hypothesis violated: odd part of g vanishes on the node grid");

  LemmaReport report;
  report.hz = hz_at_zero(g, nodes);
  report.im_hz = report.hz.imag();
  report.nonzero = std::abs(report.im_hz) > tol;
  return report;
}

double directional_degeneracy_probe(const disk::DiskExtension& ext, Complex z0,
                                    double a, double b,
                                    const diffops::DiffConfig& cfg) {
  if (a == 0.0 && b == 0.0)
    throw std::invalid_argument("directional_degeneracy_probe: zero direction vector");
  auto field = [&](const Eigen::VectorXd& w) {
    const Complex value =
        disk::extend(ext, std::hypot(w[0], w[1]), std::atan2(w[1], w[0]));
    return a * value.real() + b * value.imag();
  };
  cfg.validate();
  const double h = cfg.step;
  const Eigen::Vector2d z(z0.real(), z0.imag());
  Eigen::Vector2d grad;
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXd zp = z, zm = z;
    zp[i] += h;
    zm[i] -= h;
    grad[i] = (field(zp) - field(zm)) / (2.0 * h);
  }
  return grad.norm();
}

int winding_number(const std::vector<Complex>& curve, Complex z0, double tol) {
  if (curve.size() < 2) throw std::invalid_argument("winding_number: degenerate curve");
  const std::size_t n = curve.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = curve[k];
    const Complex b = curve[(k + 1) % n];
    // Distance from z0 to segment [a, b].
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double dist;
    if (len2 == 0.0) {
      dist = std::abs(z0 - a);
    } else {
      double s = ((z0 - a).real() * ab.real() + (z0 - a).imag() * ab.imag()) / len2;
      s = std::clamp(s, 0.0, 1.0);
      dist = std::abs(z0 - (a + s * ab));
    }
    if (dist <= tol) throw std::domain_error("winding_number: z0 lies on the curve");
    total += std::arg((b - z0) / (a - z0));
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace harmonic::rkc
