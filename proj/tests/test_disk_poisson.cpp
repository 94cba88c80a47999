#include <doctest.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "harmonic/diffops.hpp"
#include "harmonic/disk_poisson.hpp"

using namespace harmonic;
using disk::Complex;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("closed-form kernel values") {
  CHECK(disk::kernel_closed(0.0, 1.234) == doctest::Approx(1.0));
  // (1 - 0.25) / (1.25 - 1) = 3, (1 - 0.25) / (1.25 + 1) = 1/3
  CHECK(disk::kernel_closed(0.5, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(disk::kernel_closed(0.5, kPi) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(disk::kernel_closed(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(disk::kernel_closed(-0.1, 0.0), std::domain_error);
}

TEST_CASE("kernel series agrees with the closed form") {
  CHECK(disk::kernel_series(0.0, 0.77, 5) == doctest::Approx(1.0));
  CHECK(std::abs(disk::kernel_series(0.5, 0.0, 60) - 3.0) < 1e-12);
  // 0.9^terms < 1e-14 needs terms >= 307
  CHECK(std::abs(disk::kernel_series(0.9, 1.0, 310) - disk::kernel_closed(0.9, 1.0)) <
        1e-12);

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double r = 0.9 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double theta = kTwoPi * j / 20.0;
      worst = std::max(worst, std::abs(disk::kernel_series(r, theta, 310) -
                                       disk::kernel_closed(r, theta)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("kernel positivity and symmetry") {
  for (int i = 0; i < 12; ++i) {
    const double r = 0.95 * i / 11.0;
    for (int j = 0; j < 24; ++j) {
      const double theta = kTwoPi * j / 24.0 - kPi;
      CHECK(disk::kernel_closed(r, theta) > 0.0);
      CHECK(disk::kernel_closed(r, theta) == disk::kernel_closed(r, -theta));
    }
  }
}

TEST_CASE("kernel mass is one") {
  CHECK(disk::kernel_mass(0.0, 8) == doctest::Approx(1.0));
  CHECK(std::abs(disk::kernel_mass(0.5, 256) - 1.0) < 1e-12);
  CHECK(std::abs(disk::kernel_mass(0.9, 1024) - 1.0) < 1e-10);
}

TEST_CASE("constant boundary extends to the constant") {
  const Complex c(0.3, -1.7);
  // aliasing of the node sum decays like r^nodes, so r = 0.9 needs the finer rule
  const disk::DiskExtension ext(disk::BoundaryMap::fourier({{0, c}}), 1024);
  CHECK(std::abs(disk::extend(ext, 0.5, 1.1) - c) < 1e-12);
  CHECK(std::abs(disk::extend(ext, 0.9, -2.0) - c) < 1e-12);
}

TEST_CASE("extension reproduces r^|n| e^{i n theta} for trigonometric boundaries") {
  // orthogonality oracle: the kernel series integrates e^{int} to r^|n| e^{in theta}
  const disk::DiskExtension first(disk::BoundaryMap::fourier({{1, 1.0}}), 512);
  CHECK(std::abs(disk::extend(first, 0.5, 0.0) - 0.5) < 1e-10);

  // boundary cos 2t at (0.7, pi/4): 0.49 cos(pi/2) = 0
  const disk::DiskExtension cos2(
      disk::BoundaryMap::fourier({{2, 0.5}, {-2, 0.5}}), 512);
  CHECK(std::abs(disk::extend(cos2, 0.7, kPi / 4.0)) < 1e-9);

  std::mt19937 rng(1);
  std::uniform_real_distribution<double> ur(0.0, 0.9), ut(0.0, kTwoPi);
  for (int n = -8; n <= 8; ++n) {
    const disk::DiskExtension ext(disk::BoundaryMap::fourier({{n, 1.0}}), 512);
    for (int i = 0; i < 5; ++i) {
      const double r = ur(rng), theta = ut(rng);
      const Complex expected =
          std::pow(r, std::abs(n)) * Complex(std::cos(n * theta), std::sin(n * theta));
      CHECK(std::abs(disk::extend(ext, r, theta) - expected) < 1e-9);
    }
  }
}

TEST_CASE("extension is linear in the boundary data") {
  const std::map<int, Complex> fc = {{0, {0.2, 0.0}}, {1, {1.0, 0.0}}, {-3, {0.0, 0.4}}};
  const std::map<int, Complex> gc = {{2, {0.5, -0.5}}, {-1, {0.3, 0.0}}};
  const Complex alpha(0.7, -0.2), beta(-1.1, 0.4);
  std::map<int, Complex> combo;
  for (const auto& [n, c] : fc) combo[n] += alpha * c;
  for (const auto& [n, c] : gc) combo[n] += beta * c;

  const disk::DiskExtension f(disk::BoundaryMap::fourier(fc), 256);
  const disk::DiskExtension g(disk::BoundaryMap::fourier(gc), 256);
  const disk::DiskExtension h(disk::BoundaryMap::fourier(combo), 256);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> ur(0.0, 0.9), ut(0.0, kTwoPi);
  for (int i = 0; i < 10; ++i) {
    const double r = ur(rng), theta = ut(rng);
    const Complex lhs = disk::extend(h, r, theta);
    const Complex rhs = alpha * disk::extend(f, r, theta) + beta * disk::extend(g, r, theta);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("extension is harmonic inside the disk") {
  const disk::DiskExtension ext(disk::BoundaryMap::sin_perturb_homeo(0.3), 512);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ur(0.0, 0.8), ut(0.0, kTwoPi);
  const diffops::DiffConfig stencil{5e-4};
  for (int i = 0; i < 20; ++i) {
    const double r = ur(rng), theta = ut(rng);
    const Eigen::Vector2d x(r * std::cos(theta), r * std::sin(theta));
    auto re_part = [&](const Eigen::VectorXd& w) {
      return disk::extend(ext, std::hypot(w[0], w[1]), std::atan2(w[1], w[0])).real();
    };
    auto im_part = [&](const Eigen::VectorXd& w) {
      return disk::extend(ext, std::hypot(w[0], w[1]), std::atan2(w[1], w[0])).imag();
    };
    CHECK(std::abs(diffops::fd_laplacian(re_part, x, stencil)) < 1e-5);
    CHECK(std::abs(diffops::fd_laplacian(im_part, x, stencil)) < 1e-5);
  }
}

TEST_CASE("mean value property at the center") {
  const disk::DiskExtension rotation(disk::BoundaryMap::fourier({{1, 1.0}}), 128);
  CHECK(mean_value_check(rotation) < 1e-12);
  CHECK(std::abs(disk::extend(rotation, 0.0, 0.0)) < 1e-12);

  const disk::DiskExtension homeo(disk::BoundaryMap::sin_perturb_homeo(0.3), 256);
  CHECK(mean_value_check(homeo) < 1e-10);

  const disk::DiskExtension generic(
      disk::BoundaryMap::fourier({{0, {1.0, 2.0}}, {3, {0.2, 0.1}}}), 128);
  CHECK(mean_value_check(generic) < 1e-12);
}

TEST_CASE("sampled boundary maps interpolate trigonometric data exactly") {
  const auto reference = disk::BoundaryMap::fourier({{1, 1.0}, {-2, {0.3, 0.0}}});
  std::vector<Complex> samples;
  for (int k = 0; k < 16; ++k) samples.push_back(reference(kTwoPi * k / 16.0));
  const auto interp = disk::BoundaryMap::sampled(samples);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> ut(0.0, kTwoPi);
  for (int i = 0; i < 20; ++i) {
    const double t = ut(rng);
    CHECK(std::abs(interp(t) - reference(t)) < 1e-12);
  }
  CHECK_THROWS_AS(disk::BoundaryMap::sampled(std::vector<Complex>(7)), std::invalid_argument);
}

TEST_CASE("sampled boundary map round-trips through the text format") {
  std::ostringstream text;
  text.precision(17);
  const auto reference = disk::BoundaryMap::sin_perturb_homeo(0.2);
  for (int k = 0; k < 32; ++k) {
    const Complex v = reference(kTwoPi * k / 32.0);
    text << v.real() << " " << v.imag() << "\n";
  }
  std::istringstream in(text.str());
  const auto loaded = disk::BoundaryMap::sampled_from_stream(in);
  for (int k = 0; k < 32; ++k) {
    const double t = kTwoPi * k / 32.0;
    CHECK(std::abs(loaded(t) - reference(t)) < 1e-9);
  }
}

TEST_CASE("evaluation beyond max_radius fails loudly") {
  const disk::DiskExtension ext(disk::BoundaryMap::fourier({{1, 1.0}}), 64, 0.9);
  CHECK_THROWS_WITH_AS(disk::extend(ext, 0.95, 0.0),
                       "resolution error: increase nodes or reduce radius",
                       std::domain_error);
  CHECK(std::abs(disk::boundary_value(ext, 0.5) - Complex(std::cos(0.5), std::sin(0.5))) <
        1e-15);
  CHECK_THROWS_AS(disk::DiskExtension(disk::BoundaryMap::fourier({{1, 1.0}}), 32),
                  std::invalid_argument);
  CHECK_THROWS_AS(disk::BoundaryMap::sin_perturb_homeo(1.0), std::invalid_argument);
}

TEST_CASE("conjugated boundary maps conjugate pointwise") {
  const auto f = disk::BoundaryMap::sin_perturb_homeo(0.4);
  const auto fbar = f.conjugated();
  for (int k = 0; k < 8; ++k) {
    const double t = kTwoPi * k / 8.0;
    CHECK(fbar(t) == std::conj(f(t)));
  }
}
