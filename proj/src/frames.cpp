#include "bm/frames.hpp"

#include <cmath>

namespace bm {

namespace {

void check_constants(const Mat4& C) {
  const double tol = 1e-12;
  for (int A = 0; A < 4; ++A) {
    if (std::abs(C(A, 0) - 1.0) > tol) {
      throw domain_error("constants matrix: column p=0 must be all ones");
    }
  }
  for (int a = 1; a < 4; ++a) {
    if (std::abs(C.col(a).sum()) > tol) {
      throw domain_error("constants matrix: column sums over A must vanish");
    }
    for (int b = 1; b < 4; ++b) {
      const double want = (a == b) ? 1.0 : 0.0;
      if (std::abs(0.25 * C.col(a).dot(C.col(b)) - want) > tol) {
        throw domain_error(
            "constants matrix: (1/4) sum_A C^A_a C^A_b must equal delta_ab");
      }
    }
  }
}

}  // namespace

ConstantsMatrix constants_matrix(ConstantsChoice choice) {
  Mat4 C;
  if (choice == ConstantsChoice::hadamard) {
    C << 1, 1, 1, 1,      //
        1, -1, 1, -1,     //
        1, 1, -1, -1,     //
        1, -1, -1, 1;
  } else {
    const double r3 = std::sqrt(3.0);
    C << 1, -r3, 0, 0,                                          //
        1, 1 / r3, std::sqrt(8.0 / 3.0), 0,                     //
        1, 1 / r3, -std::sqrt(2.0 / 3.0), -std::sqrt(2.0),      //
        1, 1 / r3, -std::sqrt(2.0 / 3.0), std::sqrt(2.0);
  }
  check_constants(C);
  return ConstantsMatrix{C, C.inverse(), choice};
}

ConstantsMatrix constants_matrix_from(const Mat4& C) {
  check_constants(C);
  // the choice tag only selects a published set; arbitrary valid input is
  // reported as hadamard-compatible
  return ConstantsMatrix{C, C.inverse(), ConstantsChoice::hadamard};
}

ChartPoint to_chart(const UpVector& y, const ConstantsMatrix& C) {
  const Vec4 logy = y.vec().array().log();
  const Vec4 z = C.C_inv * logy;  // z^p = C^p_A ln y^A
  const double z0 = z[0];
  ChartRegion region = ChartRegion::on;
  if (z0 > 0.0) region = ChartRegion::above;
  if (z0 < 0.0) region = ChartRegion::below;
  return ChartPoint{z0, z.tail<3>(), region};
}

UpVector from_chart(double z0, const Vec3& u, const ConstantsMatrix& C) {
  Vec4 logy = Vec4::Constant(z0);
  logy += C.C.rightCols<3>() * u;
  const Vec4 y = logy.array().exp();
  if (!y.allFinite()) {
    throw overflow_error("from_chart: chart point maps outside double range");
  }
  return UpVector(y);
}

UpVector from_chart(const ChartPoint& z, const ConstantsMatrix& C) {
  return from_chart(z.z0, z.u, C);
}

Tetrad tetrad(const UpVector& y, const ConstantsMatrix& C) {
  const Vec4 l = unit_vector(y).vec();
  Mat4 h;
  for (int p = 0; p < 4; ++p) {
    h.row(p) = C.C_inv.row(p).cwiseQuotient(l.transpose());
  }
  return Tetrad{y, h, h.inverse()};
}

Mat3 induced_indicatrix_metric(const Vec3& u, const ConstantsMatrix& C) {
  const UpVector l = from_chart(0.0, u, C);
  const Mat4 g = metric_tensor(l).g;
  // t^A_a = C^A_a l^A
  Eigen::Matrix<double, 4, 3> t =
      l.vec().asDiagonal() * C.C.rightCols<3>();
  return -(t.transpose() * g * t);
}

Mat4 conformal_tensor(const UpVector& y, const ConstantsMatrix& C) {
  const double f = metric_function(y);
  const Mat4 z = tetrad(y, C).h / f;  // z^p_A
  Vec4 e(1.0, -1.0, -1.0, -1.0);
  return z.transpose() * e.asDiagonal() * z;
}

}  // namespace bm
