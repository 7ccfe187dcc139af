#pragma once

#include <string_view>

namespace flatsphere {

// Ring {R <= |z| <= R', 0 <= arg z <= theta} with its radial sides identified by a rotation of
// angle theta. theta > 2pi is read through the covering construction.
struct AnnulusSpec {
  double inner = 0.0;  // R
  double outer = 1.0;  // R'
  double theta = 1.0;  // apex angle
};

enum class AnnulusStart { Inner, Outer };

enum class AnnulusRegime {
  InnerStart,          // radius increases from R to R', simple
  OuterExitsInner,     // sin(alpha) <= R/R', radius decreases to R, simple
  OuterReturnsOuter,   // sin(alpha) > R/R', chord of the outer circle
};

enum class AnnulusBoundary { Inner, Outer };

struct AnnulusTrajectoryReport {
  AnnulusRegime regime = AnnulusRegime::InnerStart;
  double min_radius = 0.0;
  AnnulusBoundary exit = AnnulusBoundary::Outer;
  int self_intersections = 0;
  // pi - 2 alpha for the returning regime; 0 otherwise.
  double chord_central_angle = 0.0;
};

std::string_view to_string(AnnulusRegime r);

void check_annulus(const AnnulusSpec& a);

// ln(R'/R) / theta; R must be positive.
double modulus(const AnnulusSpec& a);

// alpha in [0, pi/2] is the angle with the radial leaf at the starting point.
AnnulusTrajectoryReport classify_trajectory(const AnnulusSpec& a, AnnulusStart start, double alpha);

// floor((pi - 2 alpha) / theta) for a chord that returns to the outer boundary. Ratios within
// 1e-9 of an integer round to that integer: a chord whose rotated copy meets it exactly at the
// boundary still crosses itself there once the trajectory is extended past the annulus.
int annulus_self_intersections(const AnnulusSpec& a, double alpha);

// arccos(R/R') / theta.
double annulus_sc_lower_bound(const AnnulusSpec& a);

// The annulus swept by the one-parameter family of monogons of interior angle alpha whose lengths
// run from L to L'. Requires L'/L > 1/sin(alpha/2).
AnnulusSpec monogon_family_annulus(double alpha, double length, double outer_length);

}  // namespace flatsphere
