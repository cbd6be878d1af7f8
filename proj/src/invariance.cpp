#include "bm/invariance.hpp"

#include "bm/metric.hpp"
#include "bm/numerics.hpp"

#include <cmath>

namespace bm {

namespace {

// Sign patterns of the indicatrix coordinates in ln l^A.
const Mat4 kLogSigns = [] {
  Mat4 m;
  m << 1, 1, 1, 1,   //
      1, -1, 1, -1,  //
      1, 1, -1, -1,  //
      1, -1, -1, 1;
  return m;
}();

VectorField4 power_map(const PowerTransform& t) {
  return [f = t.exponents()](const Vec4& y) -> Vec4 {
    return Vec4((f * Vec4(y.array().log())).array().exp());
  };
}

}  // namespace

PowerTransform::PowerTransform(const Mat4& exponents) : f_(exponents) {
  const double tol = 1e-9;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(f_.row(i).sum() - 1.0) > tol) {
      throw domain_error("PowerTransform: row sums must equal 1");
    }
    if (std::abs(f_.col(i).sum() - 1.0) > tol) {
      throw domain_error("PowerTransform: column sums must equal 1");
    }
  }
}

Mat3 euler_rotation(const RotationAngles& angles) {
  const double c1 = std::cos(angles.theta), s1 = std::sin(angles.theta);
  const double c2 = std::cos(angles.psi), s2 = std::sin(angles.psi);
  const double c3 = std::cos(angles.phi), s3 = std::sin(angles.phi);
  Mat3 r;
  r << c2 * c3 - c1 * s2 * s3, -c2 * s3 - c1 * s2 * c3, s1 * s2,   //
      s2 * c3 + c1 * c2 * s3, -s2 * s3 + c1 * c2 * c3, -s1 * c2,   //
      s1 * s3, s1 * c3, c1;
  return r;
}

PowerTransform rotation_exponents(const RotationAngles& angles) {
  const Mat3 r = euler_rotation(angles);
  // ln y'^A = f^AB ln y^B with f = (S R S^T + ones)/4, S the sign block
  const auto s = kLogSigns.rightCols<3>();
  const Mat4 f = 0.25 * (s * r * s.transpose() + Mat4::Ones());
  return PowerTransform(f);
}

PowerTransform one_angle_exponents(double eta) {
  return PowerTransform(Mat4(one_angle_exponents_printed(eta).array() + 0.25));
}

Mat4 one_angle_exponents_printed(double eta) {
  const double c = 2.0 * std::cos(eta), s = 2.0 * std::sin(eta);
  Mat4 f;
  f << c + 1, s - 1, -s - 1, -c + 1,  //
      -s - 1, c + 1, -c + 1, s - 1,   //
      s - 1, -c + 1, c + 1, -s - 1,   //
      -c + 1, -s - 1, s - 1, c + 1;
  return f / 4.0;
}

UpVector apply_power_transform(const PowerTransform& t, const UpVector& y) {
  const Vec4 image = power_map(t)(y.vec());
  if (!image.allFinite()) {
    throw overflow_error("apply_power_transform: non-finite image");
  }
  return UpVector(image);
}

UpVector unimodular_dilatation(const Vec4& k, const UpVector& y) {
  if ((k.array() <= 0.0).any() || !k.allFinite()) {
    throw domain_error("unimodular_dilatation: factors must be positive");
  }
  if (std::abs(k.array().log().sum()) > 1e-12) {
    throw domain_error("unimodular_dilatation: product of factors must be 1");
  }
  return UpVector(Vec4(y.vec().cwiseProduct(k)));
}

Mat4 metricity_residual(const PowerTransform& t, const UpVector& y,
                        double step) {
  if (!(step > 0.0)) throw domain_error("metricity_residual: step <= 0");
  const auto map = power_map(t);
  const auto d2 = fd_second_derivatives(map, y.vec(), FDConfig{step, false});
  const Vec4 image_cov = covariant_vector(apply_power_transform(t, y));
  Mat4 residual = Mat4::Zero();
  for (int b = 0; b < 4; ++b) residual += image_cov[b] * d2[b];
  return residual;
}

Mat4 metric_invariance_residual(const PowerTransform& t, const UpVector& y,
                                double step) {
  if (!(step > 0.0)) throw domain_error("metric_invariance_residual: step <= 0");
  const Mat4 jac = fd_jacobian(power_map(t), y.vec(), FDConfig{step, false});
  const Mat4 g_here = metric_tensor(y).g;
  const Mat4 g_image = metric_tensor(apply_power_transform(t, y)).g;
  return g_here - jac.transpose() * g_image * jac;
}

}  // namespace bm
