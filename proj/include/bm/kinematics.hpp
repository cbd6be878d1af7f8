#pragma once

#include "bm/types.hpp"

namespace bm {

/// Bracket factors of a 3-velocity: J1 = 1+s1+s2+s3, J2 = 1-s1+s2-s3,
/// J3 = 1+s1-s2-s3, J4 = 1-s1-s2+s3 (the even sign patterns).
Vec4 bracket_factors(const Vec3& s);

/// Three-dimensional relative velocity; admissible iff all four bracket
/// factors are strictly positive.
class Velocity3 {
 public:
  explicit Velocity3(const Vec3& s);
  Velocity3(double s1, double s2, double s3);

  const Vec3& vec() const { return s_; }
  double operator[](Eigen::Index i) const { return s_[i]; }

  /// Bracket factors of this velocity.
  Vec4 brackets() const { return bracket_factors(s_); }

 private:
  Vec3 s_;
};

/// Change-of-frame matrix between the tetrads at a and b:
/// N^p_q = h^p_A(a) h_q^A(b), in the root-free tetrad convention.
/// Entry layout: N(p, q).
Mat4 kinematic_matrix(const UpVector& a, const UpVector& b);

/// s^a = N^a_0 / N^0_0 of frame b relative to frame a.
Velocity3 relative_velocity(const UpVector& a, const UpVector& b);

/// A(s) = (J1 J2 J3 J4)^(1/4); reduces to sqrt(1 - sigma^2) for
/// s = (sigma, 0, 0).
double dilatation_factor(const Velocity3& s);

/// Kinematic matrix as a function of the relative velocity alone:
/// diagonal 1/A, first row/column s^a/A, cross entries s^c/A.
Mat4 matrix_from_velocity(const Velocity3& s);

/// Extended Lorentz transformation of frame components Y.
Vec4 boost(const Vec4& Y, const Velocity3& s);

/// Fourth root of the product of the four even-sign combinations of Y;
/// invariant under boost. Throws domain_error unless all combinations are
/// positive.
double kinematic_length(const Vec4& Y);

/// Velocity composition s1 (+) s2.
Velocity3 compose(const Velocity3& s1, const Velocity3& s2);

/// Velocity subtraction: returns s1 with compose(s1, s2) = s3.
Velocity3 subtract(const Velocity3& s3, const Velocity3& s2);

/// Inverse velocity via the reciprocal-bracket sums; compose(s, reciprocal(s))
/// vanishes.
Velocity3 reciprocal(const Velocity3& s);

/// Same inverse through the polynomial / A^4 route; agrees with reciprocal.
Velocity3 reciprocal_polynomial(const Velocity3& s);

/// Small-velocity expansion of the dilatation factor up to fourth order.
double dilatation_factor_approx(const Vec3& s);

}  // namespace bm
