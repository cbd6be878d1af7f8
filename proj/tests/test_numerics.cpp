#include "bm/numerics.hpp"
#include "bm/metric.hpp"

#include "doctest.h"

#include <cmath>

using namespace bm;

namespace {

const ScalarField4 f_squared = [](const Vec4& y) {
  const double f = metric_function(UpVector(y));
  return f * f;
};

}  // namespace

TEST_CASE("gradient oracle on reference fields") {
  const Vec4 ones = Vec4::Ones();
  const Vec4 g = fd_gradient(f_squared, ones, FDConfig{1e-4, true});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(g[i] - 0.5) < 1e-8);

  const ScalarField4 constant = [](const Vec4&) { return 3.25; };
  CHECK(fd_gradient(constant, ones).cwiseAbs().maxCoeff() == 0.0);

  const Vec4 slope(1.5, -2.0, 0.25, 4.0);
  const ScalarField4 affine = [&](const Vec4& y) { return slope.dot(y) - 7.0; };
  CHECK((fd_gradient(affine, ones) - slope).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("gradient error shrinks quadratically with the step") {
  const Vec4 y(1.1, 0.9, 1.3, 0.7);
  const Vec4 exact = 2.0 * covariant_vector(UpVector(y));
  const double e1 =
      (fd_gradient(f_squared, y, FDConfig{1e-2, false}) - exact)
          .cwiseAbs()
          .maxCoeff();
  const double e2 =
      (fd_gradient(f_squared, y, FDConfig{5e-3, false}) - exact)
          .cwiseAbs()
          .maxCoeff();
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("second-derivative oracle on reference fields") {
  const Vec4 ones = Vec4::Ones();
  const Mat4 hess = fd_hessian(f_squared, ones, FDConfig{1e-4, false});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(hess(i, j) - (i == j ? -0.25 : 0.25)) < 1e-6);
      CHECK(hess(i, j) == hess(j, i));
    }
  }

  Mat4 q;
  q << 2, 1, 0, -1, 1, 3, 0.5, 0, 0, 0.5, -1, 2, -1, 0, 2, 4;
  const ScalarField4 quadratic = [&](const Vec4& y) {
    return 0.5 * y.dot(q * y);
  };
  const Mat4 sym = 0.5 * (q + q.transpose());
  CHECK((fd_hessian(quadratic, Vec4(0.3, -0.4, 2.0, 1.0)) - sym)
            .cwiseAbs()
            .maxCoeff() < 1e-8);
}

TEST_CASE("jacobian oracle is exact on linear maps") {
  Mat4 a;
  a << 1, 2, 3, 4, 0, -1, 0.5, 2, 3, 3, 3, 3, -2, 0, 1, 0;
  const VectorField4 linear = [&](const Vec4& y) { return Vec4(a * y); };
  CHECK((fd_jacobian(linear, Vec4(0.2, 1.0, -0.7, 2.0)) - a)
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("step must be positive") {
  CHECK_THROWS_AS(fd_gradient(f_squared, Vec4::Ones(), FDConfig{0.0, false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fd_hessian(f_squared, Vec4::Ones(), FDConfig{-1.0, false}),
                  std::invalid_argument);
}

TEST_CASE("integrator keeps constant solutions constant") {
  const ODESystem sys{2, [](const Eigen::VectorXd& y) {
                        return Eigen::VectorXd::Zero(y.size());
                      }};
  Eigen::VectorXd y0(2);
  y0 << 4.0, -1.0;
  const auto traj = rk4_integrate(sys, y0, 1.0, 0.1);
  CHECK(traj.size() == 11);
  CHECK((traj.back() - y0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("integrator reproduces the exponential") {
  const ODESystem sys{1, [](const Eigen::VectorXd& y) { return y; }};
  Eigen::VectorXd y0(1);
  y0 << 1.0;
  const auto traj = rk4_integrate(sys, y0, 1.0, 1e-3);
  CHECK(std::abs(traj.back()[0] - std::exp(1.0)) < 1e-9);
}

TEST_CASE("integrator global error scales as the fourth power of the step") {
  const ODESystem sys{1, [](const Eigen::VectorXd& y) { return y; }};
  Eigen::VectorXd y0(1);
  y0 << 1.0;
  auto err = [&](double step) {
    return std::abs(rk4_integrate(sys, y0, 1.0, step).back()[0] -
                    std::exp(1.0));
  };
  const double r1 = err(1e-2) / err(5e-3);
  const double r2 = err(5e-3) / err(2.5e-3);
  CHECK(r1 == doctest::Approx(16.0).epsilon(0.2));
  CHECK(r2 == doctest::Approx(16.0).epsilon(0.2));
}

TEST_CASE("integrator lands exactly on the requested length") {
  const ODESystem sys{1, [](const Eigen::VectorXd& y) { return y; }};
  Eigen::VectorXd y0(1);
  y0 << 1.0;
  // 0.25 is not a multiple of the step; a final partial step is appended
  const auto traj = rk4_integrate(sys, y0, 0.25, 0.1);
  CHECK(traj.size() == 4);
  CHECK(std::abs(traj.back()[0] - std::exp(0.25)) < 1e-6);
}

TEST_CASE("integrator rejects diverging states with a diagnostic") {
  const ODESystem sys{1, [](const Eigen::VectorXd& y) {
                        return Eigen::VectorXd(y.array() * y.array() * 1e6);
                      }};
  Eigen::VectorXd y0(1);
  y0 << 10.0;
  CHECK_THROWS_AS(rk4_integrate(sys, y0, 10.0, 0.5), std::runtime_error);
}
