#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace bm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Raised when an argument leaves the domain of an operation
/// (non-positive components, inadmissible velocity, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A velocity whose bracket factors are not all strictly positive.
class admissibility_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A chord with non-positive squared length; carries the computed value.
class spacelike_error : public domain_error {
 public:
  spacelike_error(const std::string& what, double delta_s_squared)
      : domain_error(what), delta_s_squared_(delta_s_squared) {}
  double delta_s_squared() const { return delta_s_squared_; }

 private:
  double delta_s_squared_;
};

/// A map produced a non-finite component.
class overflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest component accepted into the positive sector; the metric tensor
/// contains component reciprocals, so zeros must stay well away.
inline constexpr double kMinComponent = 1e-300;

/// A point (or vector) of the sector with all four components positive.
class UpVector {
 public:
  explicit UpVector(const Vec4& y) : y_(y) { validate(); }
  UpVector(double y1, double y2, double y3, double y4)
      : y_(Vec4(y1, y2, y3, y4)) {
    validate();
  }

  const Vec4& vec() const { return y_; }
  double operator[](Eigen::Index i) const { return y_[i]; }

 private:
  void validate() const {
    for (Eigen::Index i = 0; i < 4; ++i) {
      const double c = y_[i];
      if (!std::isfinite(c)) {
        throw domain_error("UpVector: component " + std::to_string(i + 1) +
                           " is not finite");
      }
      if (c < kMinComponent) {
        throw domain_error("UpVector: component " + std::to_string(i + 1) +
                           " = " + std::to_string(c) +
                           " is not strictly positive");
      }
    }
  }

  Vec4 y_;
};

}  // namespace bm
