#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lvl/curve.hpp"
#include "lvl/exec.hpp"

namespace lvl {

struct SignedDistance {
  double value = 0.0;  // positive inside, negative outside, 0 in the boundary band
  CurvePoint nearest;
  Side side = Side::on_boundary;
};

/// Signed distance with the nearest curve point. The side comes from the local geometry at the nearest point.
SignedDistance signed_distance_info(const JordanCurve& curve, Point2 p);
double signed_distance(const JordanCurve& curve, Point2 p);

struct NearestPointSet {
  Point2 query;
  double distance = 0.0;
  std::vector<CurvePoint> points;
  /// Set when a whole arc centred at the query realises the distance; `points` then holds samples of it.
  bool continuum = false;
};

/// Curve points within distance d(1 + tol_multiplier) of p, near-duplicates merged.
NearestPointSet nearest_points(const JordanCurve& curve, Point2 p, double tol_multiplier = 1e-6);

/// Smallest angle of a circular sector around `center` containing every direction to `pts`.
double angular_span(Point2 center, const std::vector<Point2>& pts);

struct ScalarGrid {
  Point2 origin;
  double h = 1.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;  // row-major, index j * nx + i

  [[nodiscard]] Point2 node(int i, int j) const { return {origin.x + i * h, origin.y + j * h}; }
  [[nodiscard]] double at(int i, int j) const { return values[static_cast<size_t>(j) * static_cast<size_t>(nx) + static_cast<size_t>(i)]; }
};

inline constexpr std::size_t kDefaultGridCap = 10'000'000;

class GridCapExceeded : public std::runtime_error {
 public:
  GridCapExceeded(std::size_t nodes, std::size_t cap, double required_h);
  std::size_t nodes;
  double required_h;  // smallest spacing that fits under the cap
};

/// Node counts for sampling `box` at spacing h.
std::pair<int, int> grid_dims(const Box& box, double h);

/// Signed distance sampled at grid nodes. Output does not depend on the execution mode.
ScalarGrid grid_sample(const JordanCurve& curve, const Box& box, double h, std::size_t cap = kDefaultGridCap,
                       Exec exec = Exec::parallel);

/// Distance to a union of edges and points.
double set_distance(const std::vector<Edge>& edges, const std::vector<Point2>& points, Point2 p);

}  // namespace lvl
