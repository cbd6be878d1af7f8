#include "bm/kinematics.hpp"

#include "bm/metric.hpp"

#include <cmath>
#include <string>

namespace bm {

namespace {

// Even sign patterns shared by the brackets, the kinematic length and the
// first column of the kinematic matrix. Row i gives the signs of (s1,s2,s3)
// in J_{i+1}.
const Eigen::Matrix<double, 4, 3> kSigns = [] {
  Eigen::Matrix<double, 4, 3> m;
  m << 1, 1, 1,   //
      -1, 1, -1,  //
      1, -1, -1,  //
      -1, -1, 1;
  return m;
}();

}  // namespace

Vec4 bracket_factors(const Vec3& s) {
  return Vec4::Ones() + kSigns * s;
}

Velocity3::Velocity3(const Vec3& s) : s_(s) {
  if (!s_.allFinite()) throw admissibility_error("Velocity3: non-finite");
  const Vec4 j = bracket_factors(s_);
  if ((j.array() <= 0.0).any()) {
    throw admissibility_error(
        "Velocity3: bracket factor not positive (J = " +
        std::to_string(j[0]) + ", " + std::to_string(j[1]) + ", " +
        std::to_string(j[2]) + ", " + std::to_string(j[3]) + ")");
  }
}

Velocity3::Velocity3(double s1, double s2, double s3)
    : Velocity3(Vec3(s1, s2, s3)) {}

Mat4 kinematic_matrix(const UpVector& a, const UpVector& b) {
  // ratio vector (F(a)/(4F(b))) b^A/a^A; the constants cancel and the whole
  // matrix is determined by its first column
  const Vec4 r = (metric_function(a) / (4.0 * metric_function(b))) *
                 b.vec().cwiseQuotient(a.vec());
  Vec4 col0;
  col0[0] = r.sum();
  col0.tail<3>() = kSigns.transpose() * r;

  Mat4 n;
  n << col0[0], col0[1], col0[2], col0[3],  //
      col0[1], col0[0], col0[3], col0[2],   //
      col0[2], col0[3], col0[0], col0[1],   //
      col0[3], col0[2], col0[1], col0[0];
  return n;
}

Velocity3 relative_velocity(const UpVector& a, const UpVector& b) {
  const Mat4 n = kinematic_matrix(a, b);
  return Velocity3(Vec3(n.col(0).tail<3>() / n(0, 0)));
}

double dilatation_factor(const Velocity3& s) {
  return std::exp(0.25 * s.brackets().array().log().sum());
}

Mat4 matrix_from_velocity(const Velocity3& s) {
  const double inv_a = 1.0 / dilatation_factor(s);
  Vec4 col0;
  col0 << 1.0, s[0], s[1], s[2];
  col0 *= inv_a;
  Mat4 n;
  n << col0[0], col0[1], col0[2], col0[3],  //
      col0[1], col0[0], col0[3], col0[2],   //
      col0[2], col0[3], col0[0], col0[1],   //
      col0[3], col0[2], col0[1], col0[0];
  return n;
}

Vec4 boost(const Vec4& Y, const Velocity3& s) {
  return matrix_from_velocity(s) * Y;
}

double kinematic_length(const Vec4& Y) {
  Vec4 combos;
  combos[0] = Y[0];
  combos[1] = Y[0];
  combos[2] = Y[0];
  combos[3] = Y[0];
  combos += kSigns * Vec3(Y[1], Y[2], Y[3]);
  if ((combos.array() <= 0.0).any()) {
    throw domain_error("kinematic_length: vector is not future-pointing");
  }
  return std::exp(0.25 * combos.array().log().sum());
}

Velocity3 compose(const Velocity3& s1, const Velocity3& s2) {
  const Vec3 a = s1.vec();
  const Vec3 b = s2.vec();
  const double den = 1.0 + a.dot(b);
  const Vec3 num(a[0] + b[0] + a[1] * b[2] + a[2] * b[1],
                 a[1] + b[1] + a[0] * b[2] + a[2] * b[0],
                 a[2] + b[2] + a[0] * b[1] + a[1] * b[0]);
  return Velocity3(Vec3(num / den));
}

Velocity3 subtract(const Velocity3& s3, const Velocity3& s2) {
  const Vec4 j3 = s3.brackets();
  const Vec4 j2 = s2.brackets();
  const Vec4 r = j3.cwiseQuotient(j2);
  const double h = r.sum();
  if (h == 0.0) throw domain_error("subtract: degenerate configuration");
  return Velocity3(Vec3((kSigns.transpose() * r) / h));
}

Velocity3 reciprocal(const Velocity3& s) {
  // the inverse velocity has bracket factors proportional to 1/J_i; the
  // proportionality constant is fixed by the brackets summing to 4, which
  // turns the bracket-sum display into signed sums over the mean of 1/J
  const Vec4 inv_j = s.brackets().cwiseInverse();
  return Velocity3(Vec3((kSigns.transpose() * inv_j) / inv_j.sum()));
}

Velocity3 reciprocal_polynomial(const Velocity3& s) {
  // same normalization through the polynomial route: A^4 sum(1/J) is the
  // third elementary symmetric function of the brackets
  const Vec4 j = s.brackets();
  const double e3 = j.prod() * j.cwiseInverse().sum();
  const double s1 = s[0], s2 = s[1], s3 = s[2];
  Vec3 out;
  out[0] = s1 - 2.0 * s2 * s3 - s1 * s1 * s1 + s1 * (s2 * s2 + s3 * s3);
  out[1] = s2 - 2.0 * s1 * s3 - s2 * s2 * s2 + s2 * (s1 * s1 + s3 * s3);
  out[2] = s3 - 2.0 * s1 * s2 - s3 * s3 * s3 + s3 * (s1 * s1 + s2 * s2);
  return Velocity3(Vec3(-4.0 * out / e3));
}

double dilatation_factor_approx(const Vec3& s) {
  const double sq = s.squaredNorm();
  const double quart = s.array().pow(4).sum();
  const double a1 = 1.0 - 0.5 * sq - 0.125 * quart;
  const double pairs = s[0] * s[0] * s[1] * s[1] + s[1] * s[1] * s[2] * s[2] +
                       s[0] * s[0] * s[2] * s[2];
  const double a2 = 2.0 * s[0] * s[1] * s[2] - 1.25 * pairs;
  return a1 + a2;
}

}  // namespace bm
