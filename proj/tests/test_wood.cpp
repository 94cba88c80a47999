#include <doctest.h>

#include <cmath>
#include <random>

#include "harmonic/diffops.hpp"
#include "harmonic/rkc.hpp"
#include "harmonic/wood.hpp"

using namespace harmonic;

TEST_CASE("eval3 on pinned points") {
  CHECK(wood::eval3(0, 0, 0) == Eigen::Vector3d(0, 0, 0));
  // (1 - 27 + 6, 2 - 9, 3)
  CHECK(wood::eval3(1, 2, 3) == Eigen::Vector3d(-20, -7, 3));
  CHECK(wood::eval3(1, 0, 0) == Eigen::Vector3d(1, 0, 0));
}

TEST_CASE("invert3 on pinned points") {
  CHECK(wood::invert3(0, 0, 0) == Eigen::Vector3d(0, 0, 0));
  CHECK((wood::invert3(-20, -7, 3) - Eigen::Vector3d(1, 2, 3)).norm() < 1e-12);
  CHECK((wood::invert3(8, 0, 0) - Eigen::Vector3d(2, 0, 0)).norm() < 1e-12);
}

TEST_CASE("closed-form Jacobian determinant 3x^2") {
  CHECK(wood::jacobian_det3(0.0, 5.0, -2.0) == 0.0);
  CHECK(wood::jacobian_det3(2.0, 0.0, 0.0) == 12.0);
  CHECK(wood::jacobian_det3(-1.0, 3.0, 7.0) == 3.0);
}

TEST_CASE("evalN extends by the identity on leading coordinates") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd p(3);
    p << u(rng), u(rng), u(rng);
    CHECK((wood::evalN(p, 3) - Eigen::VectorXd(wood::eval3(p[0], p[1], p[2]))).norm() ==
          0.0);
  }
  Eigen::VectorXd five(5);
  five << 7, 9, 1, 2, 3;
  Eigen::VectorXd expected(5);
  expected << 7, 9, -20, -7, 3;
  CHECK((wood::evalN(five, 5) - expected).norm() == 0.0);

  CHECK(wood::evalN(Eigen::VectorXd::Zero(4), 4).norm() == 0.0);
  CHECK_THROWS_AS(wood::evalN(Eigen::VectorXd::Zero(4), 5), std::invalid_argument);
  CHECK_THROWS_AS(wood::evalN(Eigen::VectorXd::Zero(2), 2), std::invalid_argument);
}

TEST_CASE("round trip away from the degenerate plane") {
  // The inverse is ill-conditioned where the Jacobian vanishes ({x = 0}): the
  // cube root turns last-ulp noise of the image into ~1e-5 errors right at the
  // plane, so the sample keeps |x| >= 0.05. The plane itself is covered by the
  // degeneracy-locus test below.
  std::mt19937 rng(0);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst_fwd = 0.0, worst_bwd = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector3d p(u(rng), u(rng), u(rng));
    if (std::abs(p[0]) < 0.05) p[0] += p[0] < 0.0 ? -0.05 : 0.05;
    const Eigen::Vector3d image = wood::eval3(p[0], p[1], p[2]);
    worst_fwd = std::max(worst_fwd,
                         (wood::invert3(image[0], image[1], image[2]) - p).norm());

    const Eigen::Vector3d q(u(rng), u(rng), u(rng));
    const Eigen::Vector3d source = wood::invert3(q[0], q[1], q[2]);
    worst_bwd = std::max(worst_bwd,
                         (wood::eval3(source[0], source[1], source[2]) - q).norm());
  }
  CHECK(worst_fwd < 1e-9);
  CHECK(worst_bwd < 1e-9);
}

TEST_CASE("finite-difference determinant matches 3x^2") {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto map = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(wood::eval3(x[0], x[1], x[2]));
  };
  for (int i = 0; i < 30; ++i) {
    const Eigen::Vector3d p(u(rng), u(rng), u(rng));
    const double fd = diffops::fd_jacobian(map, p).determinant();
    CHECK(std::abs(fd - wood::jacobian_det3(p[0], p[1], p[2])) < 1e-5);
  }
}

TEST_CASE("degeneracy locus is exactly the plane x = 0") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto map = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(wood::eval3(x[0], x[1], x[2]));
  };
  for (int i = 0; i < 20; ++i) {
    const Eigen::Vector3d p(0.0, u(rng), u(rng));
    CHECK(wood::jacobian_det3(p[0], p[1], p[2]) == 0.0);
    CHECK(std::abs(diffops::fd_jacobian(map, p).determinant()) < 1e-6);
  }
  CHECK(wood::jacobian_det3(1e-8, 1.0, 1.0) > 0.0);
}

TEST_CASE("all components are harmonic") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Eigen::VectorXd> samples3, samples5;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd p(3);
    p << u(rng), u(rng), u(rng);
    samples3.push_back(p);
  }
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd p(5);
    for (int j = 0; j < 5; ++j) p[j] = u(rng);
    samples5.push_back(p);
  }
  const auto report3 = wood::harmonicity_report(3, samples3);
  CHECK(report3.worst() < 1e-5);
  CHECK(report3.max_abs_laplacian[2] < 1e-9);  // linear component

  const auto report5 = wood::harmonicity_report(5, samples5);
  CHECK(report5.worst() < 1e-5);
}

TEST_CASE("no two-dimensional analogue: planar harmonic homeomorphisms keep positive Jacobian") {
  for (double a : {0.0, 0.4}) {
    const auto homeo =
        a == 0.0 ? rkc::CircleHomeo::identity() : rkc::CircleHomeo::sin_perturb(a);
    const auto report =
        rkc::rkc_scan(homeo, rkc::ExtensionConfig{512, 0.95}, rkc::GridSpec{6, 24, 0.8});
    CHECK(report.min_jacobian > 0.0);
  }
}
