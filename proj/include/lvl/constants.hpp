#pragma once

#include <string>
#include <vector>

#include "lvl/curve.hpp"
#include "lvl/exec.hpp"

namespace lvl {

enum class ConstantKind { zeta_pair, zeta_sup, zeta_limit, delta_linear, two_point, chord_arc };

std::string to_string(ConstantKind k);

struct ConstantReport {
  ConstantKind kind = ConstantKind::zeta_pair;
  double value = 0.0;
  CurvePoint x;
  CurvePoint y;
  double radius = 0.0;  // delta_linear only
  double r0 = 0.0;      // zeta_sup / zeta_limit scale cap
  int samples_used = 0;
  bool refined = false;
  double net_spacing = 0.0;
  // zeta_limit: sup per scale, aligned with `scales` (decreasing).
  std::vector<double> scales;
  std::vector<double> sequence;
};

/// Budget and execution policy for the sampled suprema.
struct Sampler {
  int base_points = 1024;
  int vertex_levels = 8;
  int max_points = 3072;
  int refine_iterations = 20;
  int refine_rounds = 2;
  int top_k = 16;
  Exec exec = Exec::parallel;
};

/// Deviation of the smaller-diameter subarc from the chord line, over the chord length.
/// When both subarcs have the same diameter the larger deviation is returned.
double zeta_pair(const JordanCurve& curve, CurvePoint x, CurvePoint y);
/// diam of the smaller-diameter subarc over |x - y|.
double two_point_ratio(const JordanCurve& curve, CurvePoint x, CurvePoint y);
/// Length of the shorter subarc over |x - y|.
double chord_arc_ratio(const JordanCurve& curve, CurvePoint x, CurvePoint y);

ConstantReport zeta_sup(const JordanCurve& curve, double r0, const Sampler& sampler = {});
/// diam * 2^-k for k = 1..levels.
std::vector<double> default_zeta_scales(const JordanCurve& curve, int levels = 8);
ConstantReport zeta_limit(const JordanCurve& curve, const std::vector<double>& scales, const Sampler& sampler = {});

/// min over lines P through x of max dist(z, P), z in curve ∩ B(x, r), divided by r.
double delta_linear(const JordanCurve& curve, CurvePoint x, double r, double* best_angle = nullptr);
ConstantReport delta_linear_report(const JordanCurve& curve, CurvePoint x, double r);

ConstantReport two_point_constant(const JordanCurve& curve, const Sampler& sampler = {});
ConstantReport chord_arc_constant(const JordanCurve& curve, const Sampler& sampler = {});

struct ChordalCheck {
  bool ok = false;
  ConstantReport report;  // witness when !ok
};

ChordalCheck check_chordal(const JordanCurve& curve, double zeta, double r0, const Sampler& sampler = {});

/// Largest r0 of the form diam * 2^-k (k = 0..max_halvings) with zeta_sup(r0) <= zeta; 0 if none.
double largest_chordal_scale(const JordanCurve& curve, double zeta, const Sampler& sampler = {},
                             int max_halvings = 20);

/// max{4 zeta^2 + 2 zeta + 1, diam / r0}
double two_point_bound(double zeta, double diameter, double r0);

}  // namespace lvl
