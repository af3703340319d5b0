#pragma once

#include <cstdint>
#include <string>

#include "lvl/curve.hpp"

namespace lvl {

/// Positively oriented regular polygon, first vertex at the origin, first edge along +x.
JordanCurve regular_ngon(int n, double side);

/// Circle of radius r as two counter-clockwise semicircles.
JordanCurve circle_curve(double r, Point2 center = {});

/// Feet and height of tooth n of the staircase: x_n = (2^-n - 2^-n-2, 0), y_n = (2^-n, 0).
struct StaircaseTooth {
  Point2 left_foot;
  Point2 right_foot;
  double height = 0.0;
};
StaircaseTooth staircase_tooth(int n);

/// Boundary of [-1,2]x[-3,0] with teeth n = 0..teeth-1 on top; the tail is closed flat along y = 0.
JordanCurve staircase_sharpljc(int teeth);

/// Circle carrying the n-th bump of the sharp quasicircle example.
struct BumpArc {
  Point2 center;
  double radius = 0.0;  // 4^-n-2
  double alpha = 0.0;   // (pi/12) 2^(1-n)
};
BumpArc sharplqc_bump(int n);

/// Regular N-gon with side 2 below the top edge [-1,1]; the top edge carries bumps n = 1..n_max.
JordanCurve sharplqc_curve(int n, int n_max);

enum class ChoiceRule { all_flat, all_bump, alternating, seeded };

struct SnowflakeSpec {
  int n = 6;
  double p = 0.25;
  int depth = 0;
  ChoiceRule rule = ChoiceRule::all_bump;
  std::uint64_t seed = 0;
};

inline constexpr long long kSnowflakeEdgeCap = 1'000'000;

/// Rohde-type snowflake: every edge is replaced by a flat four-piece arc or an outward tent of four length-p pieces.
JordanCurve rohde_snowflake(const SnowflakeSpec& spec);

/// Two unit squares joined by a neck of length 1 and the given width.
JordanCurve dumbbell(double neck_width);

ChoiceRule parse_choice_rule(const std::string& name);
std::string to_string(ChoiceRule rule);

}  // namespace lvl
