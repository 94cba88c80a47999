#include "harmonic/wood.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonic::wood {

Eigen::Vector3d eval3(double x, double y, double z) {
  return {x * x * x - 3.0 * x * z * z + y * z, y - 3.0 * x * z, z};
}

Eigen::Vector3d invert3(double a, double b, double c) {
  const double x = std::cbrt(std::fma(-b, c, a));  // a - b c in one rounding
  const double y = b + 3.0 * x * c;
  return {x, y, c};
}

double jacobian_det3(double x, double /*y*/, double /*z*/) { return 3.0 * x * x; }

Eigen::VectorXd evalN(const Eigen::VectorXd& x, int n) {
  if (n < 3) throw std::invalid_argument("evalN: n must be >= 3");
  if (x.size() != n) throw std::invalid_argument("evalN: point length does not match n");
  Eigen::VectorXd out = x;
  out.tail<3>() = eval3(x[n - 3], x[n - 2], x[n - 1]);
  return out;
}

HarmonicityReport harmonicity_report(int n, const std::vector<Eigen::VectorXd>& samples,
                                     const diffops::DiffConfig& cfg) {
  if (samples.empty())
    throw std::invalid_argument("harmonicity_report: empty sample list");
  HarmonicityReport report;
  report.max_abs_laplacian = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    auto component = [&, i](const Eigen::VectorXd& p) { return evalN(p, n)[i]; };
    for (const auto& p : samples) {
      if (p.size() != n)
        throw std::invalid_argument("harmonicity_report: sample length mismatch");
      report.max_abs_laplacian[i] = std::max(
          report.max_abs_laplacian[i], std::abs(diffops::fd_laplacian(component, p, cfg)));
    }
  }
  return report;
}

}  // namespace harmonic::wood
