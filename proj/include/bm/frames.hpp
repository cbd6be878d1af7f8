#pragma once

#include "bm/metric.hpp"
#include "bm/types.hpp"

namespace bm {

enum class ConstantsChoice { hadamard, orthonormal };

/// Constants C^A_p parameterizing the indicatrix, p = 0..3.
/// Column p = 0 is all ones; columns 1..3 sum to zero over A and satisfy
/// (1/4) sum_A C^A_a C^A_b = delta_ab.
struct ConstantsMatrix {
  Mat4 C;      // C(A, p) = C^A_p
  Mat4 C_inv;  // C_inv(p, A) = C^p_A, so C_inv * C = identity
  ConstantsChoice choice;
};

ConstantsMatrix constants_matrix(
    ConstantsChoice choice = ConstantsChoice::hadamard);

/// Builds a ConstantsMatrix from user-supplied columns C^A_p; rejects sets
/// violating the ConstantsMatrix conditions.
ConstantsMatrix constants_matrix_from(const Mat4& C);

enum class ChartRegion { above, on, below };

/// Chart coordinates: z0 = ln F plus three indicatrix coordinates u.
struct ChartPoint {
  double z0;
  Vec3 u;
  ChartRegion region;  // sign classification of z0
};

/// z^p = C^p_A ln y^A; z^0 = ln F(y), z^a = u^a.
ChartPoint to_chart(const UpVector& y, const ConstantsMatrix& C);

/// y^A = exp(z0) exp(C^A_a u^a); F(y) = exp(z0).
UpVector from_chart(double z0, const Vec3& u, const ConstantsMatrix& C);
UpVector from_chart(const ChartPoint& z, const ConstantsMatrix& C);

/// Frame of four covectors h^p_A with its reciprocal h_p^A.
struct Tetrad {
  UpVector base;
  Mat4 h;        // h(p, A) = h^p_A
  Mat4 h_recip;  // h_recip(A, p) = h_p^A; h * h_recip = identity
};

/// h^p_A = C^p_A / l^A; decomposes g with signature (+,-,-,-).
Tetrad tetrad(const UpVector& y, const ConstantsMatrix& C);

/// i_ab = -t^A_a t^B_b g_AB with t^A_a = C^A_a l^A, evaluated at the
/// indicatrix point with coordinates u. Identity for admissible constants.
Mat3 induced_indicatrix_metric(const Vec3& u, const ConstantsMatrix& C);

/// c_AB = z^p_A z^q_B e_pq with z^p_A = h^p_A / F; satisfies g = F^2 c.
Mat4 conformal_tensor(const UpVector& y, const ConstantsMatrix& C);

}  // namespace bm
