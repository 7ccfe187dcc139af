#pragma once

#include <span>
#include <vector>

namespace flatsphere {

inline constexpr int kMaxGapSingularities = 30;

struct CurvatureProfile {
  std::vector<double> curvatures;
  double gap = 0.0;
};

// Minimum of |1 - sum_{i in I} k_i| over all 2^n subsets I, the empty and full sets included.
// Requires n <= 30, every k_i < 1 and sum k_i = 2 within 1e-9.
double curvature_gap(std::span<const double> k);

CurvatureProfile make_profile(std::vector<double> k);

// True iff every angle is within 1e-9 of 2pi + (4pi/3) m for an integer m >= -1.
bool cubic_case_check(std::span<const double> angles);

// Curvatures of the sharp diameter family: m copies of eps, m - 1 copies of -eps and two copies
// of 1 - eps/2.
std::vector<double> sharp_family_curvatures(int m, double eps);

}  // namespace flatsphere
