#pragma once

#include "bm/types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace bm {

/// Central-difference configuration.
struct FDConfig {
  double step = 1e-4;
  bool richardson = false;  // one extrapolation level for gradients
};

using ScalarField4 = std::function<double(const Vec4&)>;
using VectorField4 = std::function<Vec4(const Vec4&)>;

/// Central-difference gradient of a scalar field on R^4.
Vec4 fd_gradient(const ScalarField4& f, const Vec4& y, const FDConfig& cfg = {});

/// Symmetric central-difference Hessian of a scalar field on R^4.
Mat4 fd_hessian(const ScalarField4& f, const Vec4& y,
                const FDConfig& cfg = {.step = 1e-3});

/// Central-difference Jacobian J(i,j) = d f_i / d y_j of a map R^4 -> R^4.
Mat4 fd_jacobian(const VectorField4& f, const Vec4& y,
                 const FDConfig& cfg = {});

/// Second derivatives d^2 f_B / (d y_C d y_D) of a map R^4 -> R^4,
/// returned as four symmetric 4x4 matrices indexed by the component B.
std::array<Mat4, 4> fd_second_derivatives(const VectorField4& f, const Vec4& y,
                                          const FDConfig& cfg = {.step = 1e-3});

/// Autonomous first-order system.
struct ODESystem {
  int dimension;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> rhs;
};

/// Classic fixed-step fourth-order Runge-Kutta. States are sampled at step
/// multiples; a final partial step lands exactly on `length`. Throws on a
/// non-finite state.
std::vector<Eigen::VectorXd> rk4_integrate(const ODESystem& sys,
                                           const Eigen::VectorXd& y0,
                                           double length, double step);

}  // namespace bm
