#include "bm/verify.hpp"

#include "bm/frames.hpp"
#include "bm/geodesics.hpp"
#include "bm/invariance.hpp"
#include "bm/kinematics.hpp"
#include "bm/metric.hpp"
#include "bm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bm {

namespace {

using Rng = std::mt19937_64;

double log_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

Vec4 sample_up(Rng& rng, double lo, double hi) {
  Vec4 y;
  for (int i = 0; i < 4; ++i) y[i] = log_uniform(rng, lo, hi);
  return y;
}

Vec3 sample_unit3(Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  Vec3 n;
  do {
    n = Vec3(d(rng), d(rng), d(rng));
  } while (n.norm() < 1e-6);
  return n.normalized();
}

// Admissible velocity with every bracket factor at least `margin`.
Velocity3 sample_velocity(Rng& rng, double radius, double margin) {
  std::uniform_real_distribution<double> d(-radius, radius);
  for (;;) {
    const Vec3 s(d(rng), d(rng), d(rng));
    if ((bracket_factors(s).array() >= margin).all()) return Velocity3(s);
  }
}

// Vector with all four even-sign combinations positive (future-pointing for
// the kinematic length), sampled through the combinations themselves.
Vec4 sample_future(Rng& rng, double lo, double hi) {
  const Mat4 signs = [] {
    Mat4 m;
    m << 1, 1, 1, 1,   //
        1, -1, 1, -1,  //
        1, 1, -1, -1,  //
        1, -1, -1, 1;
    return m;
  }();
  const Vec4 combos = sample_up(rng, lo, hi);
  // the sign matrix is 2x its own inverse: Y = signs^{-1} c = signs c / 4
  return 0.25 * (signs * combos);
}

// Geodesic from a random interior point with rapidity up to `rho_max`.
GeodesicCurve sample_geodesic(Rng& rng, const ConstantsMatrix& C,
                              double length, double rho_max) {
  const UpVector start(sample_up(rng, 0.5, 2.0));
  std::uniform_real_distribution<double> rho_d(0.0, rho_max);
  const double rho = rho_d(rng);
  Vec4 U;
  U[0] = std::cosh(rho);
  U.tail<3>() = std::sinh(rho) * sample_unit3(rng);
  // dy^A/ds = y^A (U^0 + C^A_a U^a) has unit g-norm by construction
  const Vec4 dir =
      start.vec().cwiseProduct(Vec4(Vec4::Constant(U[0]) +
                                    Vec4(C.C.rightCols<3>() * U.tail<3>())));
  return solve_ivp(start, dir, length, C);
}

std::string format_detail(const char* what, double value) {
  std::ostringstream os;
  os << what << " = " << value;
  return os.str();
}

CheckResult make_result(int id, const std::string& name, double worst,
                        double tol, const std::string& detail = {}) {
  return CheckResult{id, name, worst <= tol, worst, tol, detail};
}

// --- criteria ---------------------------------------------------------------

CheckResult check_determinant(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const UpVector y(sample_up(rng, 1e-3, 1e3));
    const double det = equilibrated_determinant(metric_tensor(y).g);
    worst = std::max(worst, std::abs(det + 1.0 / 256.0));
  }
  return make_result(1, "metric determinant is -1/256", worst, 1e-10);
}

CheckResult check_signature(Rng& rng) {
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const UpVector y(sample_up(rng, 1e-3, 1e3));
    const Mat4 g = metric_tensor(y).g;
    // congruence by a positive diagonal scaling preserves the signature and
    // keeps the eigenproblem well conditioned at extreme points
    Vec4 scale;
    for (int k = 0; k < 4; ++k) {
      scale[k] = 1.0 / std::sqrt(std::abs(g(k, k)));
    }
    const Mat4 gs = scale.asDiagonal() * g * scale.asDiagonal();
    const Eigen::SelfAdjointEigenSolver<Mat4> es(gs);
    const auto ev = es.eigenvalues();
    const int positive = (ev.array() > 0.0).count();
    const int negative = (ev.array() < 0.0).count();
    if (positive != 1 || negative != 3) ++failures;
  }
  return make_result(2, "metric signature is (+,-,-,-)",
                     static_cast<double>(failures), 0.0,
                     format_detail("failures", failures));
}

CheckResult check_hessian_oracle(Rng& rng) {
  const ScalarField4 f2 = [](const Vec4& y) {
    const double f = metric_function(UpVector(y));
    return f * f;
  };
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const UpVector y(sample_up(rng, 0.5, 2.0));
    const Mat4 half_hess =
        0.5 * fd_hessian(f2, y.vec(), FDConfig{1e-4, false});
    worst = std::max(
        worst, (metric_tensor(y).g - half_hess).cwiseAbs().maxCoeff());
  }
  return make_result(3, "metric tensor matches half the Hessian of F^2",
                     worst, 1e-6);
}

CheckResult check_tetrads(Rng& rng) {
  double worst = 0.0;
  for (const auto choice :
       {ConstantsChoice::hadamard, ConstantsChoice::orthonormal}) {
    const ConstantsMatrix C = constants_matrix(choice);
    for (int i = 0; i < 100; ++i) {
      const UpVector y(sample_up(rng, 0.5, 2.0));
      const Tetrad t = tetrad(y, C);
      const double recip =
          (t.h * t.h_recip - Mat4::Identity()).cwiseAbs().maxCoeff();
      const double det = std::abs(std::abs(t.h.determinant()) - 1.0 / 16.0);
      const Mat4 rebuilt = t.h.transpose() *
                           Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal() * t.h;
      const double decomp =
          (metric_tensor(y).g - rebuilt).cwiseAbs().maxCoeff();
      worst = std::max({worst, recip, det, decomp});
    }
  }
  return make_result(4, "tetrad reciprocity, |det h| = 1/16, decomposition",
                     worst, 1e-12);
}

CheckResult check_indicatrix_metric() {
  double worst = 0.0;
  for (const auto choice :
       {ConstantsChoice::hadamard, ConstantsChoice::orthonormal}) {
    const ConstantsMatrix C = constants_matrix(choice);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < 5; ++k) {
          const Vec3 u(-1.0 + 0.5 * i, -1.0 + 0.5 * j, -1.0 + 0.5 * k);
          const Mat3 m = induced_indicatrix_metric(u, C);
          worst =
              std::max(worst, (m - Mat3::Identity()).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return make_result(5, "induced indicatrix metric is the identity", worst,
                     1e-12);
}

struct GeodesicOracleResult {
  double worst_dev = 0.0;
  double worst_speed = 0.0;
};

GeodesicOracleResult geodesic_vs_rk4(Rng& rng, const ConstantsMatrix& C) {
  GeodesicOracleResult out;
  const double length = 3.0;
  const double step = 1e-3;
  const ODESystem sys{
      8, [](const Eigen::VectorXd& state) -> Eigen::VectorXd {
        return geodesic_rhs(state.head<4>(), state.tail<4>());
      }};
  for (int trial = 0; trial < 100; ++trial) {
    const GeodesicCurve curve = sample_geodesic(rng, C, length, 1.2);
    // initial chart state of the same curve
    const ChartPoint c0 = curve.chart_at(0.0);
    const double a = curve.params().a;
    const double b = curve.params().b;
    const double q =
        std::sqrt(std::max(b * b - a * a, 0.0));
    Eigen::VectorXd state0(8);
    state0 << c0.z0, c0.u, b / (a * a),
        Vec3((q / (a * a)) * curve.params().n);
    const auto traj = rk4_integrate(sys, state0, length, step);
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const double s = std::min(static_cast<double>(k) * step, length);
      const UpVector oracle =
          from_chart(traj[k][0], traj[k].segment<3>(1), C);
      const UpVector closed = curve(s);
      out.worst_dev = std::max(
          out.worst_dev,
          (oracle.vec() - closed.vec()).cwiseAbs().maxCoeff());
    }
    // unit-speed spot checks by central differences
    const double h = 1e-5;
    for (const double s : {0.5, 1.5, 2.5}) {
      const Vec4 dyds =
          (curve(s + h).vec() - curve(s - h).vec()) / (2.0 * h);
      const double norm2 = dyds.dot(metric_tensor(curve(s)).g * dyds);
      out.worst_speed = std::max(out.worst_speed, std::abs(norm2 - 1.0));
    }
  }
  return out;
}

CheckResult check_geodesic_oracle(Rng& rng) {
  const auto r = geodesic_vs_rk4(rng, constants_matrix());
  CheckResult res = make_result(
      6, "closed-form geodesics match the RK4 oracle",
      std::max(r.worst_dev, r.worst_speed * 1e2), 1e-6,
      format_detail("unit-speed error", r.worst_speed));
  // the two sub-bounds are 1e-6 (trajectory) and 1e-8 (unit speed)
  res.pass = r.worst_dev <= 1e-6 && r.worst_speed <= 1e-8;
  res.worst = r.worst_dev;
  return res;
}

CheckResult check_angle_identities(Rng& rng) {
  const ConstantsMatrix Ch = constants_matrix(ConstantsChoice::hadamard);
  const ConstantsMatrix Co = constants_matrix(ConstantsChoice::orthonormal);
  double worst_chart = 0.0;   // vs chart euclidean distance, 1e-12
  double worst_sym = 0.0;     // symmetry + additivity, 1e-10
  double worst_x = 0.0;       // X(delta s) vs e^{2 eta}, 1e-12
  for (int i = 0; i < 200; ++i) {
    const UpVector p(sample_up(rng, 0.5, 2.0));
    const UpVector r(sample_up(rng, 0.5, 2.0));
    const double eta = angle(p, r);
    worst_sym = std::max(worst_sym, std::abs(eta - angle(r, p)));
    for (const ConstantsMatrix* C : {&Ch, &Co}) {
      const double chart_dist = (to_chart(p, *C).u - to_chart(r, *C).u).norm();
      worst_chart = std::max(worst_chart, std::abs(eta - chart_dist));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const GeodesicCurve curve = sample_geodesic(rng, Ch, 3.0, 1.2);
    const UpVector pa = curve(0.0);
    const UpVector pb = curve(1.0);
    const UpVector pc = curve(2.2);
    worst_sym = std::max(
        worst_sym, std::abs(angle(pa, pb) + angle(pb, pc) - angle(pa, pc)));
    const GeodesicSolution sol = solve_bvp(pa, pc, Ch);
    worst_x = std::max(worst_x, std::abs(sol.curve.X(sol.delta_s) -
                                         std::exp(2.0 * sol.eta)));
  }
  CheckResult res = make_result(
      7, "angle = chart distance, additivity, X = e^{2 eta}", worst_chart,
      1e-12,
      format_detail("symmetry/additivity error", worst_sym) + ", " +
          format_detail("X error", worst_x));
  res.pass =
      worst_chart <= 1e-12 && worst_sym <= 1e-10 && worst_x <= 1e-12;
  return res;
}

CheckResult check_hand_values() {
  double worst = 0.0;
  const UpVector ones(1.0, 1.0, 1.0, 1.0);
  const UpVector e1(std::exp(1.0), 1.0, 1.0, 1.0);
  worst = std::max(worst,
                   std::abs(angle(e1, ones) - std::sqrt(3.0) / 4.0));
  worst = std::max(
      worst, std::abs(distance(ones, UpVector(4.0, 4.0, 4.0, 4.0)) - 3.0));
  bool typed_throw = false;
  try {
    distance(ones, e1);
  } catch (const spacelike_error& err) {
    typed_throw = err.delta_s_squared() <= 0.0;
  }
  CheckResult res =
      make_result(8, "hand-checked angle/distance values", worst, 1e-12,
                  typed_throw ? "spacelike pair raised the typed error"
                              : "spacelike pair did NOT raise the typed error");
  res.pass = res.pass && typed_throw;
  return res;
}

CheckResult check_kinematic_matrix(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const UpVector a(sample_up(rng, 0.5, 2.0));
    const UpVector b(sample_up(rng, 0.5, 2.0));
    const UpVector c(sample_up(rng, 0.5, 2.0));
    const Mat4 nab = kinematic_matrix(a, b);
    const Mat4 nbc = kinematic_matrix(b, c);
    const Mat4 nac = kinematic_matrix(a, c);
    worst = std::max(worst, std::abs(nab.determinant() - 1.0));
    // quartic identity: the even-sign combinations of the first column
    // multiply to one
    const Vec4 col = nab.col(0);
    const double quartic = (col[0] + col[1] + col[2] + col[3]) *
                           (col[0] - col[1] + col[2] - col[3]) *
                           (col[0] + col[1] - col[2] - col[3]) *
                           (col[0] - col[1] - col[2] + col[3]);
    worst = std::max(worst, std::abs(quartic - 1.0));
    worst = std::max(worst, (nab * nbc - nac).cwiseAbs().maxCoeff());
    const Mat4 rebuilt = matrix_from_velocity(relative_velocity(a, b));
    worst = std::max(worst, (rebuilt - nab).cwiseAbs().maxCoeff());
  }
  return make_result(
      9, "kinematic matrix: det 1, quartic identity, group property", worst,
      1e-12);
}

CheckResult check_length_invariance(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vec4 Y = sample_future(rng, 0.2, 2.0);
    const Velocity3 s = sample_velocity(rng, 0.6, 0.05);
    worst = std::max(worst, std::abs(kinematic_length(boost(Y, s)) -
                                     kinematic_length(Y)));
  }
  const Vec4 lorentz = boost(Vec4(1.0, 0.0, 0.0, 0.0), Velocity3(0.5, 0, 0));
  const double gamma = 1.0 / std::sqrt(0.75);
  const double lorentz_err =
      (lorentz - Vec4(gamma, 0.5 * gamma, 0.0, 0.0)).cwiseAbs().maxCoeff();
  CheckResult res = make_result(
      10, "kinematic length is boost-invariant; 1D reduction is Lorentz",
      worst, 1e-12, format_detail("1D reduction error", lorentz_err));
  res.pass = res.pass && lorentz_err <= 1e-9;
  return res;
}

CheckResult check_velocity_algebra(Rng& rng) {
  double worst = 0.0;
  const Velocity3 half(0.5, 0.0, 0.0);
  worst = std::max(worst, (compose(half, half).vec() -
                           Vec3(0.8, 0.0, 0.0)).cwiseAbs().maxCoeff());
  for (int i = 0; i < 1000; ++i) {
    const Velocity3 s1 = sample_velocity(rng, 0.5, 0.05);
    const Velocity3 s2 = sample_velocity(rng, 0.5, 0.05);
    const Velocity3 s3 = compose(s1, s2);
    worst = std::max(
        worst, (subtract(s3, s2).vec() - s1.vec()).cwiseAbs().maxCoeff());
    worst = std::max(
        worst, compose(s1, reciprocal(s1)).vec().cwiseAbs().maxCoeff());
    worst = std::max(worst, (reciprocal(s1).vec() -
                             reciprocal_polynomial(s1).vec())
                                .cwiseAbs()
                                .maxCoeff());
  }
  return make_result(
      11, "velocity composition, subtraction and reciprocity", worst, 1e-12);
}

CheckResult check_dilatation_expansion() {
  double worst_excess = -1.0;
  for (int i = 0; i <= 6; ++i) {
    for (int j = 0; j <= 6; ++j) {
      for (int k = 0; k <= 6; ++k) {
        const Vec3 s(-0.15 + 0.05 * i, -0.15 + 0.05 * j, -0.15 + 0.05 * k);
        const double exact = dilatation_factor(Velocity3(s));
        const double err = std::abs(exact - dilatation_factor_approx(s));
        const double bound = 5.0 * std::pow(s.norm(), 5);
        worst_excess = std::max(worst_excess, err - bound);
      }
    }
  }
  return make_result(12,
                     "small-velocity expansion within the remainder bound",
                     std::max(worst_excess, 0.0), 0.0,
                     format_detail("worst excess over bound", worst_excess));
}

CheckResult check_invariance_suite(Rng& rng) {
  std::uniform_real_distribution<double> theta_d(0.0, M_PI);
  std::uniform_real_distribution<double> angle_d(-M_PI, M_PI);
  double worst_f = 0.0;        // F-invariance, 1e-12
  double worst_metric = 0.0;   // metric-tensor invariance residual, 1e-6
  double worst_metricity = 0.0;  // metricity residual, 1e-6
  for (int t = 0; t < 20; ++t) {
    const RotationAngles angles{theta_d(rng), angle_d(rng), angle_d(rng)};
    const PowerTransform f = rotation_exponents(angles);
    for (int i = 0; i < 20; ++i) {
      const UpVector y(sample_up(rng, 0.5, 2.0));
      const UpVector image = apply_power_transform(f, y);
      worst_f = std::max(
          worst_f, std::abs(metric_function(image) - metric_function(y)));
      worst_metric = std::max(
          worst_metric,
          metric_invariance_residual(f, y, 1e-4).cwiseAbs().maxCoeff());
      worst_metricity = std::max(
          worst_metricity,
          metricity_residual(f, y, 3e-4).cwiseAbs().maxCoeff());
    }
  }

  // negative control: a doubly-stochastic exponent perturbation that is not a
  // rotation must fail metricity clearly
  Mat4 perturbed = rotation_exponents(RotationAngles{0.4, 0.3, -0.2})
                       .exponents();
  const double eps = 0.2;
  perturbed(0, 0) += eps;
  perturbed(0, 1) -= eps;
  perturbed(1, 0) -= eps;
  perturbed(1, 1) += eps;
  const double control =
      metricity_residual(PowerTransform(perturbed),
                         UpVector(1.3, 0.7, 1.1, 0.9), 3e-4)
          .cwiseAbs()
          .maxCoeff();

  // one-angle coefficients: specialization of the Euler form and a
  // one-parameter group in the angle
  double worst_special = 0.0;  // 1e-14
  double worst_group = 0.0;    // 1e-10
  for (const double eta : {0.3, -0.7, 1.1, 2.9}) {
    const Mat4 one = one_angle_exponents(eta).exponents();
    const Mat4 euler =
        rotation_exponents(RotationAngles{0.0, -eta, 0.0}).exponents();
    worst_special =
        std::max(worst_special, (one - euler).cwiseAbs().maxCoeff());
  }
  for (const auto [e1, e2] : {std::pair{0.3, 0.5}, {1.1, -0.4}, {-0.2, -0.9}}) {
    const Mat4 lhs = one_angle_exponents(e1).exponents() *
                     one_angle_exponents(e2).exponents();
    const Mat4 rhs = one_angle_exponents(e1 + e2).exponents();
    worst_group = std::max(worst_group, (lhs - rhs).cwiseAbs().maxCoeff());
  }

  CheckResult res;
  res.id = 13;
  res.name = "invariance: rotations preserve F, g and metricity";
  res.worst = std::max({worst_metric, worst_metricity});
  res.tolerance = 1e-6;
  res.pass = worst_f <= 1e-12 && worst_metric <= 1e-6 &&
             worst_metricity <= 1e-6 && control > 1e-2 &&
             worst_special <= 1e-14 && worst_group <= 1e-10;
  std::ostringstream os;
  os << "F error = " << worst_f << ", negative control = " << control
     << ", one-angle specialization = " << worst_special
     << ", group error = " << worst_group;
  res.detail = os.str();
  return res;
}

}  // namespace

double equilibrated_determinant(const Mat4& m) {
  Vec4 scale;
  for (int i = 0; i < 4; ++i) {
    const double d = std::abs(m(i, i));
    scale[i] = d > 0.0 ? 1.0 / std::sqrt(d) : 1.0;
  }
  const Mat4 ms = scale.asDiagonal() * m * scale.asDiagonal();
  double log_restore = 0.0;
  for (int i = 0; i < 4; ++i) log_restore -= 2.0 * std::log(scale[i]);
  return ms.determinant() * std::exp(log_restore);
}

std::vector<CheckResult> run_verification(unsigned seed) {
  Rng rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_determinant(rng));
  results.push_back(check_signature(rng));
  results.push_back(check_hessian_oracle(rng));
  results.push_back(check_tetrads(rng));
  results.push_back(check_indicatrix_metric());
  results.push_back(check_geodesic_oracle(rng));
  results.push_back(check_angle_identities(rng));
  results.push_back(check_hand_values());
  results.push_back(check_kinematic_matrix(rng));
  results.push_back(check_length_invariance(rng));
  results.push_back(check_velocity_algebra(rng));
  results.push_back(check_dilatation_expansion());
  results.push_back(check_invariance_suite(rng));
  return results;
}

}  // namespace bm
