#include "bm/geodesics.hpp"

#include <cmath>

namespace bm {

GeodesicCurve::GeodesicCurve(const GeodesicIVP& ivp,
                             const ConstantsMatrix& constants, double length)
    : ivp_(ivp), constants_(constants), length_(length) {
  if (!(ivp_.a > 0.0)) throw domain_error("geodesic: a must be positive");
  const double q2 = ivp_.b * ivp_.b - ivp_.a * ivp_.a;
  if (q2 < -1e-12 * ivp_.b * ivp_.b) {
    throw domain_error("geodesic: b^2 - a^2 < 0 (not admissible)");
  }
  q_ = std::sqrt(std::max(q2, 0.0));
}

double GeodesicCurve::metric_at(double s) const {
  const double f2 = ivp_.a * ivp_.a + 2.0 * ivp_.b * s + s * s;
  if (!(f2 > 0.0)) {
    throw domain_error("geodesic: curve parameter outside positive-F range");
  }
  return std::sqrt(f2);
}

double GeodesicCurve::X(double s) const {
  if (q_ == 0.0) return 1.0;
  return ((s + ivp_.b - q_) / (s + ivp_.b + q_)) *
         ((ivp_.b + q_) / (ivp_.b - q_));
}

ChartPoint GeodesicCurve::chart_at(double s) const {
  const double f = metric_at(s);
  Vec3 u = ivp_.m;
  if (q_ > 0.0) {
    u += ivp_.n * 0.5 * std::log((s + ivp_.b - q_) / (s + ivp_.b + q_));
  }
  const double z0 = std::log(f);
  ChartRegion region = ChartRegion::on;
  if (z0 > 0.0) region = ChartRegion::above;
  if (z0 < 0.0) region = ChartRegion::below;
  return ChartPoint{z0, u, region};
}

UpVector GeodesicCurve::operator()(double s) const {
  return from_chart(chart_at(s), constants_);
}

Eigen::Matrix<double, 8, 1> geodesic_rhs(const Vec4& z, const Vec4& U) {
  (void)z;  // the chart Christoffels do not involve the position
  Eigen::Matrix<double, 8, 1> d;
  d.head<4>() = U;
  d[4] = -(U[0] * U[0] + U.tail<3>().squaredNorm());
  d.tail<3>() = -2.0 * U[0] * U.tail<3>();
  return d;
}

GeodesicCurve solve_ivp(const UpVector& start, const Vec4& direction,
                        double length, const ConstantsMatrix& constants) {
  const MetricAtPoint metric = metric_tensor(start);
  const double norm2 = direction.dot(metric.g * direction);
  if (!(norm2 > 0.0)) {
    throw domain_error("solve_ivp: direction is not timelike (g-norm^2 = " +
                       std::to_string(norm2) + ")");
  }
  const Vec4 d = direction / std::sqrt(norm2);

  const double a = metric_function(start);
  const ChartPoint c0 = to_chart(start, constants);
  // chart velocity U^p = z^p_A dy^A/ds = (h^p_A / F) d^A
  const Vec4 U = (tetrad(start, constants).h * d) / a;
  if (!(U[0] > 0.0)) {
    throw domain_error("solve_ivp: direction is not future-pointing");
  }

  const double b = a * a * U[0];
  const double q = a * a * U.tail<3>().norm();
  if (b * b - a * a < -1e-12) {
    throw domain_error("solve_ivp: b^2 - a^2 < 0 (not admissible)");
  }

  Vec3 n = Vec3::Zero();
  Vec3 m = c0.u;
  if (q > 0.0) {
    n = U.tail<3>().normalized();
    m = c0.u - n * 0.5 * std::log((b - q) / (b + q));
  }
  return GeodesicCurve(GeodesicIVP{a, b, n, m}, constants, length);
}

GeodesicSolution solve_bvp(const UpVector& y1, const UpVector& y2,
                           const ConstantsMatrix& constants) {
  const double f1 = metric_function(y1);
  const double f2 = metric_function(y2);
  const double eta = angle(y1, y2);
  const double ds2 = f1 * f1 + f2 * f2 - 2.0 * f1 * f2 * std::cosh(eta);
  if (!(ds2 > 0.0)) {
    throw spacelike_error(
        "solve_bvp: endpoints are not timelike separated (delta_s^2 = " +
            std::to_string(ds2) + ")",
        ds2);
  }
  const double delta_s = std::sqrt(ds2);
  const double a = f1;
  const double b = (f1 * f2 * std::cosh(eta) - f1 * f1) / delta_s;
  const double q = f1 * f2 * std::sinh(eta) / delta_s;

  const Vec3 u1 = to_chart(y1, constants).u;
  const Vec3 u2 = to_chart(y2, constants).u;
  Vec3 n = Vec3::Zero();
  Vec3 m = u1;
  if (eta > 0.0 && q > 0.0) {
    n = (u2 - u1) / eta;
    m = u1 - n * 0.5 * std::log((b - q) / (b + q));
  }
  GeodesicCurve curve(GeodesicIVP{a, b, n, m}, constants, delta_s);
  return GeodesicSolution{curve, delta_s, y1, y2, eta};
}

UpVector point_along(const UpVector& y1, const UpVector& y2, double s,
                     const ConstantsMatrix& constants) {
  const GeodesicSolution sol = solve_bvp(y1, y2, constants);
  if (s < -1e-12 || s > sol.delta_s * (1.0 + 1e-12)) {
    throw domain_error("point_along: s outside [0, delta_s]");
  }
  return sol.curve(s);
}

double angle(const UpVector& a, const UpVector& b) {
  const Vec4 la = unit_vector(a).vec().array().log();
  const Vec4 lb = unit_vector(b).vec().array().log();
  return std::sqrt(0.25 * (la - lb).squaredNorm());
}

double distance(const UpVector& a, const UpVector& b) {
  const double fa = metric_function(a);
  const double fb = metric_function(b);
  const double d2 = fa * fa + fb * fb - 2.0 * fa * fb * std::cosh(angle(a, b));
  if (!(d2 > 0.0)) {
    throw spacelike_error(
        "distance: endpoints are not timelike separated (|b-a|^2 = " +
            std::to_string(d2) + ")",
        d2);
  }
  return std::sqrt(d2);
}

double scalar_product(const UpVector& a, const UpVector& b) {
  return metric_function(a) * metric_function(b) * std::cosh(angle(a, b));
}

double angle_2d(const Vec2& a, const Vec2& b) {
  if (!(a[0] > 0.0 && a[1] > 0.0 && b[0] > 0.0 && b[1] > 0.0)) {
    throw domain_error("angle_2d: components must be strictly positive");
  }
  const double fa = std::sqrt(a[0] * a[1]);
  const double fb = std::sqrt(b[0] * b[1]);
  return std::log(a[0] * fb / (b[0] * fa));
}

}  // namespace bm
