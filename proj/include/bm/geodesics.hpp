#pragma once

#include "bm/frames.hpp"
#include "bm/types.hpp"

namespace bm {

/// Integration constants of a geodesic: F(s)^2 = a^2 + 2 b s + s^2, chart
/// direction n (unit 3-vector, unused when b = a) and chart offsets m.
struct GeodesicIVP {
  double a;  // F at s = 0, positive
  double b;  // b >= a for admissible (timelike, future) geodesics
  Vec3 n;    // |n| = 1 when b > a
  Vec3 m;    // u(s) = m + n * (1/2) ln((s+b-q)/(s+b+q)), q = sqrt(b^2-a^2)
};

/// Immutable closed-form geodesic sampler in chart coordinates.
class GeodesicCurve {
 public:
  GeodesicCurve(const GeodesicIVP& ivp, const ConstantsMatrix& constants,
                double length);

  /// Point at arc length s (any s with a^2 + 2bs + s^2 > 0).
  UpVector operator()(double s) const;

  /// F along the curve.
  double metric_at(double s) const;

  /// Chart coordinates at arc length s.
  ChartPoint chart_at(double s) const;

  /// X(s) = [(s+b-q)/(s+b+q)] * [(b+q)/(b-q)]; X(0) = 1.
  double X(double s) const;

  const GeodesicIVP& params() const { return ivp_; }
  double length() const { return length_; }
  const ConstantsMatrix& constants() const { return constants_; }

 private:
  GeodesicIVP ivp_;
  ConstantsMatrix constants_;
  double length_;
  double q_;  // sqrt(b^2 - a^2)
};

/// Fixed-edge geodesic with derived quantities.
struct GeodesicSolution {
  GeodesicCurve curve;
  double delta_s;  // total length between the endpoints
  UpVector y1;
  UpVector y2;
  double eta;  // angle between the endpoints
};

/// Right-hand side of the geodesic system in chart coordinates:
/// state (z^p, U^p), dz/ds = U, dU^0/ds = -[(U^0)^2 + |U|^2],
/// dU^a/ds = -2 U^a U^0. Serves as the integration oracle.
Eigen::Matrix<double, 8, 1> geodesic_rhs(const Vec4& z, const Vec4& U);

/// Initial-value solution. `direction` is dy/ds at `start`; it is normalized
/// to unit g-norm, must be future-pointing and timelike.
GeodesicCurve solve_ivp(const UpVector& start, const Vec4& direction,
                        double length, const ConstantsMatrix& constants);

/// Fixed-edge solution through two points; throws spacelike_error (carrying
/// the computed squared length) when the chord is not timelike.
GeodesicSolution solve_bvp(const UpVector& y1, const UpVector& y2,
                           const ConstantsMatrix& constants);

/// Point at arc length s in [0, delta_s] along the geodesic from y1 to y2.
UpVector point_along(const UpVector& y1, const UpVector& y2, double s,
                     const ConstantsMatrix& constants);

/// eta(a,b) = sqrt((1/4) sum_A (ln(a^A F(b) / (b^A F(a))))^2); symmetric,
/// equals the euclidean distance of the indicatrix coordinates.
double angle(const UpVector& a, const UpVector& b);

/// |b (-) a| = sqrt(F(a)^2 + F(b)^2 - 2 F(a) F(b) cosh eta); throws
/// spacelike_error when the radicand is not positive.
double distance(const UpVector& a, const UpVector& b);

/// (ab) = F(a) F(b) cosh eta(a,b).
double scalar_product(const UpVector& a, const UpVector& b);

/// Two-dimensional reduction: eta = ln(a^1 F(b) / (b^1 F(a))) with
/// F = sqrt(y^1 y^2); cosh eta reproduces the hyperbolic angle formula.
double angle_2d(const Vec2& a, const Vec2& b);

}  // namespace bm
