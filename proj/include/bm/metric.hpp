#pragma once

#include "bm/types.hpp"

namespace bm {

/// Metric tensor and its inverse evaluated at a base point.
struct MetricAtPoint {
  UpVector base;
  Mat4 g;      // covariant, symmetric, signature (+,-,-,-)
  Mat4 g_inv;  // contravariant
};

/// F(y) = (y1 y2 y3 y4)^(1/4); positively homogeneous of degree 1.
double metric_function(const UpVector& y);

/// Covariant components y_A = F^2 / (4 y^A).
Vec4 covariant_vector(const UpVector& y);

/// g_AB = 2 y_A y_B / F^2 - (F^2 / (4 y^A y^B)) delta_AB, with inverse.
MetricAtPoint metric_tensor(const UpVector& y);

/// l^A = y^A / F(y), so that F(l) = 1.
UpVector unit_vector(const UpVector& y);

}  // namespace bm
