#pragma once

#include "bm/types.hpp"

namespace bm {

/// Product-of-powers map y'^A = prod_B (y^B)^(f^AB). Rows and columns of f
/// sum to 1: rows for degree-1 homogeneity, columns for F-invariance.
struct PowerTransform {
  explicit PowerTransform(const Mat4& exponents);
  const Mat4& exponents() const { return f_; }

 private:
  Mat4 f_;
};

/// Euler angles of an indicatrix rotation.
struct RotationAngles {
  double theta = 0.0;
  double psi = 0.0;
  double phi = 0.0;
};

/// 3x3 rotation matrix built from the Euler angles (the l, m, n rows).
Mat3 euler_rotation(const RotationAngles& angles);

/// Exponent matrix of the nonlinear map realizing the Euler rotation of the
/// indicatrix coordinates; zero angles give the identity exponents.
PowerTransform rotation_exponents(const RotationAngles& angles);

/// One-angle rotation exponents, homogenized so each row sums to 1 (the
/// as-printed coefficients shifted by +1/4). Identity at eta = 0.
PowerTransform one_angle_exponents(double eta);

/// The as-printed one-angle coefficients (rows sum to 0); they produce the
/// same images as the homogenized set on the indicatrix only.
Mat4 one_angle_exponents_printed(double eta);

/// y'^A = prod_B (y^B)^(f^AB); preserves the metric function.
UpVector apply_power_transform(const PowerTransform& t, const UpVector& y);

/// Componentwise scaling y^A k^A with k1 k2 k3 k4 = 1; preserves F and
/// translates the indicatrix coordinates.
UpVector unimodular_dilatation(const Vec4& k, const UpVector& y);

/// Residual of the metricity condition: contraction of the covariant vector
/// at the image point with the finite-difference second derivatives of the
/// map. Near zero for rotation-generated transforms.
Mat4 metricity_residual(const PowerTransform& t, const UpVector& y,
                        double step = 1e-3);

/// Residual g_CD(y) - F^A_C F^B_D g_AB(t(y)) with the Jacobian taken by
/// central differences. Near zero for rotation-generated transforms.
Mat4 metric_invariance_residual(const PowerTransform& t, const UpVector& y,
                                double step = 1e-4);

}  // namespace bm
