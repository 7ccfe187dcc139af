#include "flatsphere/annulus.hpp"

#include <cmath>

#include <fmt/format.h>

#include "flatsphere/error.hpp"
#include "flatsphere/geometry.hpp"

namespace flatsphere {

std::string_view to_string(AnnulusRegime r) {
  switch (r) {
    case AnnulusRegime::InnerStart: return "inner-start";
    case AnnulusRegime::OuterExitsInner: return "outer-exits-inner";
    case AnnulusRegime::OuterReturnsOuter: return "outer-returns-outer";
  }
  return "unknown";
}

void check_annulus(const AnnulusSpec& a) {
  if (!(a.inner >= 0.0) || !(a.inner < a.outer) || !std::isfinite(a.outer)) {
    throw Error(ErrorCode::Domain, fmt::format("annulus radii must satisfy 0 <= R < R' (got {}, {})", a.inner, a.outer));
  }
  if (!(a.theta > 0.0) || !std::isfinite(a.theta)) {
    throw Error(ErrorCode::Domain, fmt::format("annulus apex angle must be positive (got {})", a.theta));
  }
}

double modulus(const AnnulusSpec& a) {
  check_annulus(a);
  if (a.inner == 0.0) throw Error(ErrorCode::Domain, "modulus of a degenerate annulus (R = 0) is infinite");
  return std::log(a.outer / a.inner) / a.theta;
}

AnnulusTrajectoryReport classify_trajectory(const AnnulusSpec& a, AnnulusStart start, double alpha) {
  check_annulus(a);
  if (!(alpha >= 0.0 && alpha <= kPi / 2)) {
    throw Error(ErrorCode::Domain, fmt::format("alpha = {} outside [0, pi/2]", alpha));
  }
  AnnulusTrajectoryReport r;
  if (start == AnnulusStart::Inner) {
    r.regime = AnnulusRegime::InnerStart;
    r.min_radius = a.inner;
    r.exit = AnnulusBoundary::Outer;
    return r;
  }
  const double closest = a.outer * std::sin(alpha);
  if (closest <= a.inner) {
    r.regime = AnnulusRegime::OuterExitsInner;
    r.min_radius = a.inner;
    r.exit = AnnulusBoundary::Inner;
    return r;
  }
  r.regime = AnnulusRegime::OuterReturnsOuter;
  r.min_radius = closest;
  r.exit = AnnulusBoundary::Outer;
  r.chord_central_angle = kPi - 2.0 * alpha;
  r.self_intersections = annulus_self_intersections(a, alpha);
  return r;
}

int annulus_self_intersections(const AnnulusSpec& a, double alpha) {
  check_annulus(a);
  if (!(alpha > 0.0 && alpha <= kPi / 2)) {
    throw Error(ErrorCode::Domain, fmt::format("alpha = {} outside (0, pi/2]", alpha));
  }
  if (a.outer * std::sin(alpha) <= a.inner) {
    throw Error(ErrorCode::Domain, "trajectory leaves through the inner boundary; it does not return");
  }
  const double ratio = (kPi - 2.0 * alpha) / a.theta;
  return static_cast<int>(std::floor(ratio + 1e-9));
}

double annulus_sc_lower_bound(const AnnulusSpec& a) {
  check_annulus(a);
  return std::acos(a.inner / a.outer) / a.theta;
}

AnnulusSpec monogon_family_annulus(double alpha, double length, double outer_length) {
  if (!(alpha > 0.0 && alpha < kPi)) throw Error(ErrorCode::Domain, "interior angle must lie in (0, pi)");
  if (!(length > 0.0)) throw Error(ErrorCode::Domain, "monogon length must be positive");
  const double half = alpha / 2.0;
  if (!(outer_length / length > 1.0 / std::sin(half))) {
    throw Error(ErrorCode::Domain, fmt::format("family too short: L'/L = {} must exceed 1/sin(alpha/2) = {}",
                                               outer_length / length, 1.0 / std::sin(half)));
  }
  AnnulusSpec a;
  a.theta = kPi - alpha;
  a.inner = length / (2.0 * std::cos(half));
  a.outer = outer_length * std::tan(half) / 2.0;
  return a;
}

}  // namespace flatsphere
