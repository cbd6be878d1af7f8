#include "bm/metric.hpp"

#include <cmath>

namespace bm {

double metric_function(const UpVector& y) {
  const Vec4& v = y.vec();
  // log form keeps the fourth root stable over many decades of magnitude
  return std::exp(0.25 * v.array().log().sum());
}

Vec4 covariant_vector(const UpVector& y) {
  const double f2 = std::pow(metric_function(y), 2);
  return (f2 / 4.0) * y.vec().cwiseInverse();
}

MetricAtPoint metric_tensor(const UpVector& y) {
  const double f2 = std::pow(metric_function(y), 2);
  const Vec4 ylo = covariant_vector(y);
  const Vec4& yup = y.vec();

  Mat4 g = (2.0 / f2) * (ylo * ylo.transpose());
  g.diagonal() -= (f2 / 4.0) * yup.cwiseProduct(yup).cwiseInverse();

  Mat4 g_inv = (2.0 / f2) * (yup * yup.transpose());
  g_inv.diagonal() -= (4.0 / f2) * yup.cwiseProduct(yup);

  return MetricAtPoint{y, g, g_inv};
}

UpVector unit_vector(const UpVector& y) {
  return UpVector(Vec4(y.vec() / metric_function(y)));
}

}  // namespace bm
