#pragma once

#include "bm/types.hpp"

#include <string>
#include <vector>

namespace bm {

/// Outcome of one verification criterion.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double worst = 0.0;      // worst observed error (criterion-specific scale)
  double tolerance = 0.0;  // bound the worst error is held to
  std::string detail;
};

/// Runs the full cross-module invariant suite (criteria 1-13 of the
/// verification contract) with a fixed seed; deterministic.
std::vector<CheckResult> run_verification(unsigned seed = 20260823u);

/// Numerically robust determinant of a symmetric 4x4 matrix: diagonal
/// equilibration before LU, scale factors reapplied in the log domain.
double equilibrated_determinant(const Mat4& m);

}  // namespace bm
