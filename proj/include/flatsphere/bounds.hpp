#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatsphere/surface.hpp"

namespace flatsphere {

struct BoundsReport {
  int n = 0;
  double delta = 0.0;
  std::int64_t k = 0;
  double s_bound = 0.0;
  double count_bound_log2 = 0.0;
  double simple_count_bound = 0.0;
  double simple_count_bound_log2 = 0.0;
  double length_bound = 0.0;  // at k
  double simple_length_bound = 0.0;
  double diameter_bound = 0.0;
  double delaunay_L2_bound = 0.0;
  double comb_length_bound = 0.0;
  double chords_bound = 0.0;
  double monogon_angle_bound = 0.0;
  double si_comb_bound = 0.0;  // at k, with l = comb_length_bound
};

BoundsReport compute_bounds(int n, double delta, std::int64_t k = 0);

double s_bound(int n, double delta, double k);
double length_bound(int n, double delta, double k);
double si_comb_bound(int n, double l, double k);

struct VerifyOptions {
  std::int64_t node_budget = 10'000'000;
  std::optional<double> time_budget_seconds;
  int threads = 0;
  double tol = kDefaultTolerance;
  // Cutoff multiplier applied after each truncated enumeration.
  double shrink = 0.75;
  int max_attempts = 30;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  // Passed only on the part of the data that could be examined (enumeration truncated).
  bool partial = false;
  std::string detail;
  std::string witness;
};

struct VerificationReport {
  int n = 0;
  double delta = 0.0;
  double original_area = 0.0;
  std::int64_t flips = 0;
  double cutoff = 0.0;         // simple_length_bound
  double enumerated_to = 0.0;  // largest length reached without truncation
  bool truncated = false;
  std::string truncation_reason;
  std::int64_t nodes = 0;
  int connections = 0;
  int simple_connections = 0;
  int monogons = 0;
  double diameter = 0.0;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool pass() const;
  const CheckResult* find(std::string_view name) const;
};

// Full pipeline: normalize area, gap, Delaunay flips, enumeration up to the simple length bound
// and every bound check over the result. Throws Error(Domain) when the curvature gap is zero.
VerificationReport verify_surface(const ConeSurface& s, const VerifyOptions& opt = {});

}  // namespace flatsphere
