#pragma once

#include <vector>

#include "lvl/curve.hpp"
#include "lvl/exec.hpp"

namespace lvl {

/// Deterministic point net on a curve: uniform arc-length points, all vertices, and symmetric dyadic
/// points around each vertex. Carries a table of subarc diameters over the net.
struct SampleNet {
  std::vector<CurvePoint> params;
  std::vector<Point2> points;
  std::vector<double> arclength;  // ascending, in [0, length)
  double length = 0.0;
  double spacing = 0.0;  // largest arc-length gap between consecutive net points
  std::vector<float> diam;  // diam[len * m + i]: diameter of net points i..i+len (cyclic)

  [[nodiscard]] int size() const { return static_cast<int>(points.size()); }
  [[nodiscard]] double forward_diameter(int i, int len) const {
    return diam[static_cast<size_t>(len) * points.size() + static_cast<size_t>(i)];
  }
};

struct NetOptions {
  int base_points = 1024;
  int vertex_levels = 8;
  int max_points = 3072;
};

SampleNet build_net(const JordanCurve& curve, const NetOptions& opts);

struct PairHit {
  double value = 0.0;
  int i = 0;
  int j = 0;
};

/// Best pairs by a screening score, sorted by value then index. `both_margin` is the diameter gap below
/// which the two subarcs are treated as tied.
std::vector<PairHit> scan_two_point(const SampleNet& net, int top_k, Exec exec);
std::vector<PairHit> scan_chord_arc(const SampleNet& net, int top_k, Exec exec);
std::vector<PairHit> scan_zeta(const SampleNet& net, double r0, double both_margin, int top_k, Exec exec);

}  // namespace lvl
