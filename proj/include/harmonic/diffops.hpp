#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonic::diffops {

using Complex = std::complex<double>;

/// Step configuration for the central second-order difference scheme.
///
/// First derivatives divide one rounding error by `step`; the 3-point
/// second-derivative stencil divides it by `step^2`, so it needs a coarser
/// step to stay below the tolerances used throughout this library.
struct DiffConfig {
  enum class Scheme { Central2ndOrder };

  double step = 1e-5;
  Scheme scheme = Scheme::Central2ndOrder;

  static DiffConfig first_order() { return {1e-5}; }
  static DiffConfig second_order() { return {1e-3}; }

  void validate() const {
    if (!(step > 0.0 && step < 1e-2))
      throw std::invalid_argument("DiffConfig: step must lie in (0, 1e-2)");
  }
};

enum class Sense { SensePreserving, SenseReversing, Degenerate };

inline const char* to_string(Sense s) {
  switch (s) {
    case Sense::SensePreserving: return "sense-preserving";
    case Sense::SenseReversing: return "sense-reversing";
    default: return "degenerate";
  }
}

/// Band around zero inside which a determinant is classified degenerate.
inline constexpr double kDegenerateBand = 1e-9;

struct JacobianReport {
  Eigen::MatrixXd matrix;
  std::optional<double> det;  // present only for square maps
  Sense classification = Sense::Degenerate;

  double determinant() const {
    if (!det) throw std::domain_error("determinant undefined");
    return *det;
  }
};

inline Sense classify_det(double det, double tol = kDegenerateBand) {
  if (det > tol) return Sense::SensePreserving;
  if (det < -tol) return Sense::SenseReversing;
  return Sense::Degenerate;
}

/// Central-difference Jacobian of f: R^n -> R^m at x. The determinant and
/// sense classification are filled in only when m == n.
template <class F>
JacobianReport fd_jacobian(const F& f, const Eigen::VectorXd& x,
                           const DiffConfig& cfg = {},
                           double degenerate_tol = kDegenerateBand) {
  cfg.validate();
  const double h = cfg.step;
  const int n = static_cast<int>(x.size());
  JacobianReport report;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    const Eigen::VectorXd column = (f(xp) - f(xm)) / (2.0 * h);
    if (j == 0) report.matrix.resize(column.size(), n);
    report.matrix.col(j) = column;
  }
  if (report.matrix.rows() == report.matrix.cols()) {
    report.det = report.matrix.determinant();
    report.classification = classify_det(*report.det, degenerate_tol);
  }
  return report;
}

/// 3-point-stencil Laplacian sum_i d^2u/dx_i^2 of a real or complex field.
template <class F>
auto fd_laplacian(const F& u, const Eigen::VectorXd& x,
                  const DiffConfig& cfg = DiffConfig::second_order()) {
  cfg.validate();
  const double h = cfg.step;
  const auto center = u(x);
  std::decay_t<decltype(center)> acc{};
  for (int i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    acc += (u(xp) - 2.0 * center + u(xm)) / (h * h);
  }
  return acc;
}

struct WirtingerPair {
  Complex dz;
  Complex dzbar;
};

/// Finite-difference Wirtinger derivatives of f: C^n -> C with respect to
/// the j-th variable (0-based):
///   dz    = 1/2 (d/dx_j - i d/dy_j) f,
///   dzbar = 1/2 (d/dx_j + i d/dy_j) f.
template <class F>
WirtingerPair wirtinger(const F& f, const Eigen::VectorXcd& z, int j,
                        const DiffConfig& cfg = {}) {
  cfg.validate();
  if (j < 0 || j >= z.size())
    throw std::out_of_range("wirtinger: variable index out of range");
  const double h = cfg.step;
  const Complex i_unit(0.0, 1.0);
  Eigen::VectorXcd zp = z, zm = z;
  zp[j] += h;
  zm[j] -= h;
  const Complex dx = (f(zp) - f(zm)) / (2.0 * h);
  zp = z;
  zm = z;
  zp[j] += i_unit * h;
  zm[j] -= i_unit * h;
  const Complex dy = (f(zp) - f(zm)) / (2.0 * h);
  return {0.5 * (dx - i_unit * dy), 0.5 * (dx + i_unit * dy)};
}

struct ResidualCheck {
  bool ok = false;
  double max_residual = 0.0;
};

/// Sample-based harmonicity verdict: true iff max |Laplacian| < tol over the
/// samples. Works for real- and complex-valued fields on R^k.
template <class F>
ResidualCheck is_harmonic(const F& u, const std::vector<Eigen::VectorXd>& samples,
                          double tol,
                          const DiffConfig& cfg = DiffConfig::second_order()) {
  if (samples.empty()) throw std::invalid_argument("is_harmonic: empty sample list");
  double worst = 0.0;
  for (const auto& x : samples) {
    worst = std::max(worst, std::abs(fd_laplacian(u, x, cfg)));
  }
  return {worst < tol, worst};
}

namespace detail {

/// dzbar of f in variable k, as a function usable at shifted points.
template <class F>
Complex wirtinger_dzbar_at(const F& f, const Eigen::VectorXcd& z, int k, double h) {
  const Complex i_unit(0.0, 1.0);
  Eigen::VectorXcd zp = z, zm = z;
  zp[k] += h;
  zm[k] -= h;
  const Complex dx = (f(zp) - f(zm)) / (2.0 * h);
  zp = z;
  zm = z;
  zp[k] += i_unit * h;
  zm[k] -= i_unit * h;
  const Complex dy = (f(zp) - f(zm)) / (2.0 * h);
  return 0.5 * (dx + i_unit * dy);
}

}  // namespace detail

/// Pluriharmonicity verdict: true iff max_{j,k,samples} |D_j Dbar_k f| < tol,
/// with the mixed derivative taken by composing central Wirtinger differences.
template <class F>
ResidualCheck is_pluriharmonic(const F& f,
                               const std::vector<Eigen::VectorXcd>& samples,
                               double tol,
                               const DiffConfig& cfg = DiffConfig::second_order()) {
  if (samples.empty())
    throw std::invalid_argument("is_pluriharmonic: empty sample list");
  cfg.validate();
  const double h = cfg.step;
  const Complex i_unit(0.0, 1.0);
  double worst = 0.0;
  for (const auto& z : samples) {
    const int n = static_cast<int>(z.size());
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto inner = [&](const Eigen::VectorXcd& w) {
          return detail::wirtinger_dzbar_at(f, w, k, h);
        };
        Eigen::VectorXcd zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        const Complex dx = (inner(zp) - inner(zm)) / (2.0 * h);
        zp = z;
        zm = z;
        zp[j] += i_unit * h;
        zm[j] -= i_unit * h;
        const Complex dy = (inner(zp) - inner(zm)) / (2.0 * h);
        worst = std::max(worst, std::abs(0.5 * (dx - i_unit * dy)));
      }
    }
  }
  return {worst < tol, worst};
}

/// For holomorphic f: C^n -> C^n, the 2n x 2n real Jacobian determinant equals
/// |det(df_i/dz_j)|^2. Returns the absolute difference of the two routes,
/// both evaluated by finite differences. Throws if f fails the dzbar ~ 0
/// holomorphy check at z.
template <class F>
double real_jacobian_identity_check(const F& f, const Eigen::VectorXcd& z,
                                    const DiffConfig& cfg = {},
                                    double holo_tol = 1e-6) {
  cfg.validate();
  const int n = static_cast<int>(z.size());
  Eigen::MatrixXcd complex_jac(n, n);
  for (int i = 0; i < n; ++i) {
    auto component = [&](const Eigen::VectorXcd& w) { return f(w)(i); };
    for (int j = 0; j < n; ++j) {
      const WirtingerPair pair = wirtinger(component, z, j, cfg);
      if (std::abs(pair.dzbar) > holo_tol)
        throw std::domain_error("input not holomorphic at z");
      complex_jac(i, j) = pair.dz;
    }
  }
  const double holo_route = std::norm(complex_jac.determinant());

  // Realified map (x_1, y_1, ..., x_n, y_n) -> (u_1, v_1, ..., u_n, v_n).
  auto realified = [&](const Eigen::VectorXd& w) {
    Eigen::VectorXcd arg(n);
    for (int j = 0; j < n; ++j) arg[j] = Complex(w[2 * j], w[2 * j + 1]);
    const Eigen::VectorXcd value = f(arg);
    Eigen::VectorXd out(2 * n);
    for (int i = 0; i < n; ++i) {
      out[2 * i] = value[i].real();
      out[2 * i + 1] = value[i].imag();
    }
    return out;
  };
  Eigen::VectorXd w(2 * n);
  for (int j = 0; j < n; ++j) {
    w[2 * j] = z[j].real();
    w[2 * j + 1] = z[j].imag();
  }
  const double real_route = fd_jacobian(realified, w, cfg).determinant();
  return std::abs(real_route - holo_route);
}

}  // namespace harmonic::diffops
