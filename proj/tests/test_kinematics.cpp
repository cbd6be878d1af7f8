#include "bm/kinematics.hpp"
#include "bm/metric.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace bm;

namespace {

UpVector random_up(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return UpVector(std::exp(d(rng)), std::exp(d(rng)), std::exp(d(rng)),
                  std::exp(d(rng)));
}

Velocity3 random_velocity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (;;) {
    const Vec3 s(d(rng), d(rng), d(rng));
    if ((bracket_factors(s).array() >= 0.05).all()) return Velocity3(s);
  }
}

}  // namespace

TEST_CASE("bracket factors and admissibility") {
  const Vec4 j = bracket_factors(Vec3(0.2, 0.3, 0.1));
  CHECK(j[0] == doctest::Approx(1.6));
  CHECK(j[1] == doctest::Approx(1.0));
  CHECK(j[2] == doctest::Approx(0.8));
  CHECK(j[3] == doctest::Approx(0.6));
  CHECK(j.sum() == doctest::Approx(4.0));

  CHECK_NOTHROW(Velocity3(0.3, -0.3, 0.3));
  CHECK_THROWS_AS(Velocity3(0.6, 0.6, 0.0), admissibility_error);
  CHECK_THROWS_AS(Velocity3(1.1, 0.0, 0.0), admissibility_error);
  CHECK_THROWS_AS(Velocity3(std::nan(""), 0, 0), admissibility_error);
}

TEST_CASE("frame-change matrix reference values") {
  const UpVector ones(1, 1, 1, 1);
  CHECK((kinematic_matrix(ones, ones) - Mat4::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  const double e = std::exp(1.0);
  const Mat4 n = kinematic_matrix(ones, UpVector(e, 1, 1, 1));
  const double n00 = (e + 3.0) / (4.0 * std::pow(e, 0.25));
  const double na0 = (e - 1.0) / (4.0 * std::pow(e, 0.25));
  CHECK(n(0, 0) == doctest::Approx(n00).epsilon(1e-14));
  CHECK(n00 == doctest::Approx(1.11335).epsilon(1e-5));
  for (int a = 1; a < 4; ++a) {
    CHECK(n(a, 0) == doctest::Approx(na0).epsilon(1e-14));
  }
  CHECK(na0 == doctest::Approx(0.33455).epsilon(1e-4));
}

TEST_CASE("frame-change matrix structure and identities") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const UpVector a = random_up(rng);
    const UpVector b = random_up(rng);
    const Mat4 n = kinematic_matrix(a, b);
    // two-group symmetry layout: each row/column is a permutation of the
    // first column
    CHECK(n(1, 1) == n(0, 0));
    CHECK(n(2, 2) == n(0, 0));
    CHECK(n(3, 3) == n(0, 0));
    CHECK(n(0, 1) == n(1, 0));
    CHECK(n(2, 3) == n(1, 0));
    CHECK(n(3, 2) == n(1, 0));
    CHECK(n(0, 2) == n(2, 0));
    CHECK(n(1, 3) == n(2, 0));
    CHECK(n(0, 3) == n(3, 0));
    CHECK(n(1, 2) == n(3, 0));
    CHECK(std::abs(n.determinant() - 1.0) < 1e-12);
    // signed column sums reproduce the component ratios
    const double ratio = metric_function(a) / metric_function(b);
    const Vec4 combos(n(0, 0) + n(1, 0) + n(2, 0) + n(3, 0),
                      n(0, 0) - n(1, 0) + n(2, 0) - n(3, 0),
                      n(0, 0) + n(1, 0) - n(2, 0) - n(3, 0),
                      n(0, 0) - n(1, 0) - n(2, 0) + n(3, 0));
    for (int A = 0; A < 4; ++A) {
      CHECK(combos[A] ==
            doctest::Approx(ratio * b[A] / a[A]).epsilon(1e-12));
    }
    CHECK(std::abs(combos.prod() - 1.0) < 1e-12);
  }
}

TEST_CASE("frame-change group property") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const UpVector a = random_up(rng);
    const UpVector b = random_up(rng);
    const UpVector c = random_up(rng);
    const Mat4 lhs = kinematic_matrix(a, b) * kinematic_matrix(b, c);
    CHECK((lhs - kinematic_matrix(a, c)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("relative velocity values and inversion") {
  const UpVector ones(1, 1, 1, 1);
  CHECK(relative_velocity(ones, ones).vec().cwiseAbs().maxCoeff() == 0.0);

  const double e = std::exp(1.0);
  const UpVector b(e, 1, 1, 1);
  const Velocity3 s = relative_velocity(ones, b);
  const double expected = (e - 1.0) / (e + 3.0);
  for (int a = 0; a < 3; ++a) {
    CHECK(s[a] == doctest::Approx(expected).epsilon(1e-14));
  }
  CHECK(expected == doctest::Approx(0.30049).epsilon(1e-4));

  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const UpVector p = random_up(rng);
    const UpVector q = random_up(rng);
    const Vec3 forward = relative_velocity(p, q).vec();
    const Vec3 backward = relative_velocity(q, p).vec();
    CHECK((backward - reciprocal(Velocity3(forward)).vec())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("dilatation factor values") {
  CHECK(dilatation_factor(Velocity3(0, 0, 0)) == 1.0);
  CHECK(dilatation_factor(Velocity3(0.5, 0, 0)) ==
        doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
  CHECK(dilatation_factor(Velocity3(0.1, 0.1, 0.1)) ==
        doctest::Approx(0.986661).epsilon(1e-6));
}

TEST_CASE("velocity-parameterized matrix") {
  CHECK((matrix_from_velocity(Velocity3(0, 0, 0)) - Mat4::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const Mat4 n = matrix_from_velocity(Velocity3(0.5, 0, 0));
  const double inv_a = 1.0 / std::sqrt(0.75);
  CHECK(n(0, 0) == doctest::Approx(inv_a));
  CHECK(n(1, 0) == doctest::Approx(0.5 * inv_a).epsilon(1e-6));
  CHECK(n(2, 3) == doctest::Approx(0.5 * inv_a).epsilon(1e-6));
  CHECK(n(3, 2) == doctest::Approx(0.5 * inv_a).epsilon(1e-6));

  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) {
    const UpVector a = random_up(rng);
    const UpVector b = random_up(rng);
    const Mat4 direct = kinematic_matrix(a, b);
    const Mat4 rebuilt = matrix_from_velocity(relative_velocity(a, b));
    CHECK((direct - rebuilt).cwiseAbs().maxCoeff() < 1e-12);
    // the reciprocal velocity produces the inverse matrix
    const Velocity3 s = random_velocity(rng);
    const Mat4 prod = matrix_from_velocity(s) *
                      matrix_from_velocity(reciprocal(s));
    CHECK((prod - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("boost reference values") {
  const Velocity3 s(0.5, 0, 0);
  const double gamma = 1.0 / std::sqrt(0.75);
  const Vec4 t = boost(Vec4(1, 0, 0, 0), s);
  CHECK(t[0] == doctest::Approx(1.154701).epsilon(1e-6));
  CHECK(t[1] == doctest::Approx(0.577350).epsilon(1e-6));
  CHECK(t[2] == 0.0);
  CHECK(t[3] == 0.0);

  // transverse mixing specific to this kinematics
  const Vec4 u = boost(Vec4(0, 0, 1, 0), s);
  CHECK(u[0] == 0.0);
  CHECK(u[1] == 0.0);
  CHECK(u[2] == doctest::Approx(gamma).epsilon(1e-6));
  CHECK(u[3] == doctest::Approx(0.5 * gamma).epsilon(1e-6));

  CHECK((boost(Vec4(0.3, -0.2, 4.0, 1.0), Velocity3(0, 0, 0)) -
         Vec4(0.3, -0.2, 4.0, 1.0))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("kinematic length values and invariance") {
  CHECK(kinematic_length(Vec4(1, 0, 0, 0)) == doctest::Approx(1.0));
  CHECK(kinematic_length(Vec4(1, 0.5, 0, 0)) ==
        doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
  CHECK_THROWS_AS(kinematic_length(Vec4(1, 2, 0, 0)), domain_error);

  std::mt19937_64 rng(45);
  for (int i = 0; i < 50; ++i) {
    const UpVector y = random_up(rng);
    // positive components give positive sign combinations scaled suitably
    const Vec4 Y(y[0] + y[1] + y[2] + y[3], y[0] - y[1] + y[2] - y[3],
                 y[0] + y[1] - y[2] - y[3], y[0] - y[1] - y[2] + y[3]);
    const Velocity3 s = random_velocity(rng);
    CHECK(kinematic_length(boost(Y, s)) ==
          doctest::Approx(kinematic_length(Y)).epsilon(1e-12));
  }
}

TEST_CASE("velocity composition") {
  const Velocity3 half(0.5, 0, 0);
  const Vec3 sum = compose(half, half).vec();
  CHECK(sum[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(sum[1] == 0.0);

  const Vec3 cross = compose(half, Velocity3(0, 0.5, 0)).vec();
  CHECK(cross[0] == doctest::Approx(0.5));
  CHECK(cross[1] == doctest::Approx(0.5));
  CHECK(cross[2] == doctest::Approx(0.25));

  std::mt19937_64 rng(46);
  for (int i = 0; i < 30; ++i) {
    const Velocity3 s1 = random_velocity(rng);
    const Velocity3 s2 = random_velocity(rng);
    const Velocity3 zero(0, 0, 0);
    CHECK((compose(s1, zero).vec() - s1.vec()).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK((compose(zero, s1).vec() - s1.vec()).cwiseAbs().maxCoeff() <
          1e-15);
    // the composition formula is symmetric in its arguments
    CHECK((compose(s1, s2).vec() - compose(s2, s1).vec())
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }
}

TEST_CASE("velocity subtraction inverts composition") {
  CHECK(subtract(Velocity3(0.8, 0, 0), Velocity3(0.5, 0, 0)).vec()[0] ==
        doctest::Approx(0.5).epsilon(1e-14));
  const Velocity3 s(0.2, -0.1, 0.3);
  CHECK(subtract(s, s).vec().cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    const Velocity3 s1 = random_velocity(rng);
    const Velocity3 s2 = random_velocity(rng);
    CHECK((subtract(compose(s1, s2), s2).vec() - s1.vec())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("reciprocal velocity") {
  const Vec3 r = reciprocal(Velocity3(0.5, 0, 0)).vec();
  CHECK(r[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(r[1] == 0.0);

  // frozen cross-component value, computed from the normalized signed sums
  // over the inverse brackets (1/J = 0.625, 1, 1.25, 5/3)
  const Vec3 r2 = reciprocal(Velocity3(0.2, 0.3, 0.1)).vec();
  CHECK(r2[0] == doctest::Approx(-0.17431193).epsilon(1e-7));
  CHECK(r2[1] == doctest::Approx(-0.28440367).epsilon(1e-7));
  CHECK(r2[2] == doctest::Approx(+0.00917431).epsilon(1e-6));

  std::mt19937_64 rng(48);
  for (int i = 0; i < 30; ++i) {
    const Velocity3 s = random_velocity(rng);
    CHECK(compose(s, reciprocal(s)).vec().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((reciprocal(s).vec() - reciprocal_polynomial(s).vec())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((reciprocal(reciprocal(s)).vec() - s.vec())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("small-velocity expansion of the dilatation factor") {
  CHECK(dilatation_factor_approx(Vec3::Zero()) == 1.0);
  CHECK(dilatation_factor_approx(Vec3(0.1, 0.1, 0.1)) ==
        doctest::Approx(0.9865875).epsilon(1e-12));
  for (double x = -0.15; x <= 0.151; x += 0.05) {
    for (double y = -0.15; y <= 0.151; y += 0.05) {
      for (double z = -0.15; z <= 0.151; z += 0.05) {
        const Vec3 s(x, y, z);
        const double err = std::abs(dilatation_factor(Velocity3(s)) -
                                    dilatation_factor_approx(s));
        CHECK(err <= 5.0 * std::pow(s.norm(), 5));
      }
    }
  }
}
