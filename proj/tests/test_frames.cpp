#include "bm/frames.hpp"
#include "bm/metric.hpp"
#include "bm/numerics.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace bm;

namespace {

UpVector random_up(std::mt19937_64& rng, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return UpVector(std::exp(d(rng)), std::exp(d(rng)), std::exp(d(rng)),
                  std::exp(d(rng)));
}

void check_constants_invariants(const ConstantsMatrix& C) {
  for (int A = 0; A < 4; ++A) CHECK(C.C(A, 0) == doctest::Approx(1.0));
  for (int a = 1; a < 4; ++a) {
    CHECK(std::abs(C.C.col(a).sum()) < 1e-12);
    for (int b = 1; b < 4; ++b) {
      CHECK(0.25 * C.C.col(a).dot(C.C.col(b)) ==
            doctest::Approx(a == b ? 1.0 : 0.0));
    }
  }
  CHECK((C.C_inv * C.C - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  for (int A = 0; A < 4; ++A) CHECK(C.C_inv(0, A) == doctest::Approx(0.25));
}

}  // namespace

TEST_CASE("published constants sets satisfy all invariants") {
  const ConstantsMatrix h = constants_matrix(ConstantsChoice::hadamard);
  const ConstantsMatrix o = constants_matrix(ConstantsChoice::orthonormal);
  check_constants_invariants(h);
  check_constants_invariants(o);

  // root-free set: sign columns
  Mat4 expected;
  expected << 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1;
  CHECK((h.C - expected).cwiseAbs().maxCoeff() == 0.0);

  // first non-trivial column of the alternative set
  CHECK(o.C(0, 1) == doctest::Approx(-std::sqrt(3.0)));
  CHECK(o.C(1, 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("user-supplied constants are validated") {
  CHECK_THROWS_AS(constants_matrix_from(Mat4::Identity()), domain_error);
  Mat4 ok = constants_matrix().C;
  CHECK_NOTHROW(constants_matrix_from(ok));
  ok(0, 1) += 1e-3;
  CHECK_THROWS_AS(constants_matrix_from(ok), domain_error);
}

TEST_CASE("chart coordinates of reference points") {
  const ConstantsMatrix C = constants_matrix();
  const ChartPoint origin = to_chart(UpVector(1, 1, 1, 1), C);
  CHECK(origin.z0 == 0.0);
  CHECK(origin.u.cwiseAbs().maxCoeff() == 0.0);
  CHECK(origin.region == ChartRegion::on);

  const ChartPoint p = to_chart(UpVector(std::exp(1.0), 1, 1, 1), C);
  CHECK(p.z0 == doctest::Approx(0.25));
  for (int a = 0; a < 3; ++a) CHECK(p.u[a] == doctest::Approx(0.25));
  CHECK(p.region == ChartRegion::above);

  CHECK(to_chart(UpVector(0.1, 0.2, 0.3, 0.4), C).region ==
        ChartRegion::below);
}

TEST_CASE("chart round trip and normalization") {
  const ConstantsMatrix C = constants_matrix();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const UpVector y = random_up(rng);
    const UpVector back = from_chart(to_chart(y, C), C);
    CHECK((back.vec() - y.vec()).cwiseAbs().maxCoeff() <
          1e-12 * y.vec().maxCoeff());
    const double z0 = d(rng);
    const Vec3 u(d(rng), d(rng), d(rng));
    CHECK(metric_function(from_chart(z0, u, C)) ==
          doctest::Approx(std::exp(z0)).epsilon(1e-12));
  }
  CHECK(from_chart(0.25, Vec3(0.25, 0.25, 0.25), C)[0] ==
        doctest::Approx(std::exp(1.0)));
}

TEST_CASE("chart inverse reports overflow instead of infinities") {
  const ConstantsMatrix C = constants_matrix();
  CHECK_THROWS_AS(from_chart(1000.0, Vec3::Zero(), C), overflow_error);
}

TEST_CASE("indicatrix coordinates agree between constant choices up to a "
          "fixed orthogonal map") {
  const ConstantsMatrix h = constants_matrix(ConstantsChoice::hadamard);
  const ConstantsMatrix o = constants_matrix(ConstantsChoice::orthonormal);
  // recover the linear map column by column from pure basis charts
  Mat3 R;
  for (int a = 0; a < 3; ++a) {
    const UpVector y = from_chart(0.0, Vec3::Unit(a), h);
    R.col(a) = to_chart(y, o).u;
  }
  CHECK((R.transpose() * R - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const UpVector y = random_up(rng);
    CHECK(to_chart(y, h).z0 == doctest::Approx(to_chart(y, o).z0));
    CHECK((to_chart(y, o).u - R * to_chart(y, h).u).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("tetrad at the all-ones point with the root-free constants") {
  const ConstantsMatrix C = constants_matrix();
  const Tetrad t = tetrad(UpVector(1, 1, 1, 1), C);
  CHECK((t.h - C.C_inv).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.h_recip - C.C).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("tetrad invariants at random points for both constant choices") {
  std::mt19937_64 rng(23);
  for (const auto choice :
       {ConstantsChoice::hadamard, ConstantsChoice::orthonormal}) {
    const ConstantsMatrix C = constants_matrix(choice);
    for (int i = 0; i < 20; ++i) {
      const UpVector y = random_up(rng, 0.3, 3.0);
      const Tetrad t = tetrad(y, C);
      CHECK((t.h * t.h_recip - Mat4::Identity()).cwiseAbs().maxCoeff() <
            1e-12);
      CHECK(std::abs(std::abs(t.h.determinant()) - 1.0 / 16.0) < 1e-12);
      const auto m = metric_tensor(y);
      const Mat4 g_rebuilt = t.h.transpose() *
                             Vec4(1, -1, -1, -1).asDiagonal() * t.h;
      CHECK((m.g - g_rebuilt).cwiseAbs().maxCoeff() < 1e-12);
      const Mat4 ginv_rebuilt = t.h_recip *
                                Vec4(1, -1, -1, -1).asDiagonal() *
                                t.h_recip.transpose();
      CHECK((m.g_inv - ginv_rebuilt).cwiseAbs().maxCoeff() < 1e-10);
      // time row of the frame is the covariant unit vector
      const Vec4 l_cov = covariant_vector(y) / metric_function(y);
      CHECK((t.h.row(0).transpose() - l_cov).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("induced indicatrix metric is the euclidean identity") {
  for (const auto choice :
       {ConstantsChoice::hadamard, ConstantsChoice::orthonormal}) {
    const ConstantsMatrix C = constants_matrix(choice);
    CHECK((induced_indicatrix_metric(Vec3::Zero(), C) - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    CHECK((induced_indicatrix_metric(Vec3(0.3, -0.2, 0.7), C) -
           Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("indicatrix tangent vectors match the finite-difference chart "
          "derivative") {
  const ConstantsMatrix C = constants_matrix();
  const Vec3 u(0.4, -0.1, 0.2);
  const UpVector l = from_chart(0.0, u, C);
  const double h = 1e-5;
  for (int a = 0; a < 3; ++a) {
    const Vec4 lp = from_chart(0.0, Vec3(u + h * Vec3::Unit(a)), C).vec();
    const Vec4 lm = from_chart(0.0, Vec3(u - h * Vec3::Unit(a)), C).vec();
    const Vec4 fd = (lp - lm) / (2.0 * h);
    const Vec4 expected = l.vec().cwiseProduct(C.C.col(a + 1));
    CHECK((fd - expected).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("conformal tensor properties") {
  const ConstantsMatrix C = constants_matrix();
  const UpVector ones(1, 1, 1, 1);
  CHECK((conformal_tensor(ones, C) - metric_tensor(ones).g)
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  const UpVector y(16, 1, 1, 1);
  const double f = metric_function(y);
  CHECK((f * f * conformal_tensor(y, C) - metric_tensor(y).g)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  const double k = 3.0;
  const UpVector ky(Vec4(k * y.vec()));
  CHECK((conformal_tensor(ky, C) - conformal_tensor(y, C) / (k * k))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("chart quadratic form matches the metric to second order") {
  const ConstantsMatrix C = constants_matrix();
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const UpVector y = random_up(rng, 0.5, 2.0);
    const Vec4 dy = 1e-4 * Vec4(d(rng), d(rng), d(rng), d(rng));
    const ChartPoint z1 = to_chart(y, C);
    const ChartPoint z2 = to_chart(UpVector(Vec4(y.vec() + dy)), C);
    const double dz0 = z2.z0 - z1.z0;
    const Vec3 du = z2.u - z1.u;
    const double chart_form =
        std::exp(2.0 * z1.z0) * (dz0 * dz0 - du.squaredNorm());
    const double metric_form = dy.dot(metric_tensor(y).g * dy);
    // agreement is second order: the mismatch is cubic in the displacement
    CHECK(std::abs(chart_form - metric_form) < 1e-3 * std::abs(metric_form) +
                                                   1e-14);
  }
}
