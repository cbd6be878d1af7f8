#include "bm/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bm {

namespace {

Vec4 central_gradient(const ScalarField4& f, const Vec4& y, double h) {
  Vec4 grad;
  for (int i = 0; i < 4; ++i) {
    Vec4 yp = y, ym = y;
    yp[i] += h;
    ym[i] -= h;
    grad[i] = (f(yp) - f(ym)) / (2.0 * h);
  }
  return grad;
}

}  // namespace

Vec4 fd_gradient(const ScalarField4& f, const Vec4& y, const FDConfig& cfg) {
  if (cfg.step <= 0.0) throw std::invalid_argument("fd_gradient: step <= 0");
  const Vec4 g_h = central_gradient(f, y, cfg.step);
  if (!cfg.richardson) return g_h;
  const Vec4 g_h2 = central_gradient(f, y, cfg.step / 2.0);
  return (4.0 * g_h2 - g_h) / 3.0;  // eliminates the O(h^2) term
}

Mat4 fd_hessian(const ScalarField4& f, const Vec4& y, const FDConfig& cfg) {
  if (cfg.step <= 0.0) throw std::invalid_argument("fd_hessian: step <= 0");
  const double h = cfg.step;
  const double f0 = f(y);
  Mat4 hess;
  for (int i = 0; i < 4; ++i) {
    Vec4 yp = y, ym = y;
    yp[i] += h;
    ym[i] -= h;
    hess(i, i) = (f(yp) - 2.0 * f0 + f(ym)) / (h * h);
    for (int j = i + 1; j < 4; ++j) {
      Vec4 ypp = y, ypm = y, ymp = y, ymm = y;
      ypp[i] += h; ypp[j] += h;
      ypm[i] += h; ypm[j] -= h;
      ymp[i] -= h; ymp[j] += h;
      ymm[i] -= h; ymm[j] -= h;
      const double v = (f(ypp) - f(ypm) - f(ymp) + f(ymm)) / (4.0 * h * h);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

Mat4 fd_jacobian(const VectorField4& f, const Vec4& y, const FDConfig& cfg) {
  if (cfg.step <= 0.0) throw std::invalid_argument("fd_jacobian: step <= 0");
  const double h = cfg.step;
  Mat4 jac;
  for (int j = 0; j < 4; ++j) {
    Vec4 yp = y, ym = y;
    yp[j] += h;
    ym[j] -= h;
    Vec4 col = (f(yp) - f(ym)) / (2.0 * h);
    if (cfg.richardson) {
      Vec4 yp2 = y, ym2 = y;
      yp2[j] += h / 2.0;
      ym2[j] -= h / 2.0;
      const Vec4 col2 = (f(yp2) - f(ym2)) / h;
      col = (4.0 * col2 - col) / 3.0;
    }
    jac.col(j) = col;
  }
  return jac;
}

std::array<Mat4, 4> fd_second_derivatives(const VectorField4& f, const Vec4& y,
                                          const FDConfig& cfg) {
  if (cfg.step <= 0.0) {
    throw std::invalid_argument("fd_second_derivatives: step <= 0");
  }
  const double h = cfg.step;
  const Vec4 f0 = f(y);
  std::array<Mat4, 4> d2;
  for (int i = 0; i < 4; ++i) {
    Vec4 yp = y, ym = y;
    yp[i] += h;
    ym[i] -= h;
    const Vec4 dii = (f(yp) - 2.0 * f0 + f(ym)) / (h * h);
    for (int B = 0; B < 4; ++B) d2[B](i, i) = dii[B];
    for (int j = i + 1; j < 4; ++j) {
      Vec4 ypp = y, ypm = y, ymp = y, ymm = y;
      ypp[i] += h; ypp[j] += h;
      ypm[i] += h; ypm[j] -= h;
      ymp[i] -= h; ymp[j] += h;
      ymm[i] -= h; ymm[j] -= h;
      const Vec4 dij = (f(ypp) - f(ypm) - f(ymp) + f(ymm)) / (4.0 * h * h);
      for (int B = 0; B < 4; ++B) {
        d2[B](i, j) = dij[B];
        d2[B](j, i) = dij[B];
      }
    }
  }
  return d2;
}

std::vector<Eigen::VectorXd> rk4_integrate(const ODESystem& sys,
                                           const Eigen::VectorXd& y0,
                                           double length, double step) {
  if (step <= 0.0) throw std::invalid_argument("rk4_integrate: step <= 0");
  if (length < 0.0) throw std::invalid_argument("rk4_integrate: length < 0");

  auto advance = [&](const Eigen::VectorXd& y, double h) {
    const Eigen::VectorXd k1 = sys.rhs(y);
    const Eigen::VectorXd k2 = sys.rhs(y + 0.5 * h * k1);
    const Eigen::VectorXd k3 = sys.rhs(y + 0.5 * h * k2);
    const Eigen::VectorXd k4 = sys.rhs(y + h * k3);
    return (y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).eval();
  };

  std::vector<Eigen::VectorXd> trajectory;
  trajectory.push_back(y0);
  double s = 0.0;
  Eigen::VectorXd y = y0;
  while (s + step <= length * (1.0 + 1e-15)) {
    y = advance(y, step);
    s += step;
    if (!y.allFinite()) {
      throw std::runtime_error("rk4_integrate: non-finite state at s = " +
                               std::to_string(s));
    }
    trajectory.push_back(y);
  }
  if (s < length - 1e-15 * std::max(1.0, length)) {
    y = advance(y, length - s);
    if (!y.allFinite()) {
      throw std::runtime_error("rk4_integrate: non-finite state at s = " +
                               std::to_string(length));
    }
    trajectory.push_back(y);
  }
  return trajectory;
}

}  // namespace bm
