#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvl/curve.hpp"
#include "lvl/distance_field.hpp"
#include "lvl/exec.hpp"

namespace lvl {

enum class LevelClass { empty, jordan_curve, multiple_components, non_manifold };

std::string to_string(LevelClass c);

/// Consecutive edges joined head to tail. A closed chain ends where it starts.
struct Chain {
  std::vector<Edge> edges;
  bool closed = false;
};

struct LevelSetResult {
  double epsilon = 0.0;
  std::vector<Chain> chains;
  LevelClass classification = LevelClass::empty;
  int components = 0;  // closed chains plus isolated points when manifold; graph components otherwise
  std::vector<Point2> branch_points;
  std::vector<Point2> isolated_points;
  std::vector<Point2> ridge_tips;  // chain ends certified by two or more nearest points
};

/// Raised when stitched pieces leave an uncertified open end.
class StitchError : public std::runtime_error {
 public:
  StitchError(const std::string& what, Point2 where) : std::runtime_error(what), location(where) {}
  Point2 location;
};

/// The set where the signed distance equals eps, built from offset primitives and trimmed exactly.
LevelSetResult level_set_exact(const JordanCurve& curve, double eps, Exec exec = Exec::parallel);

/// Closed chain as a curve. Throws std::invalid_argument for open chains.
JordanCurve chain_curve(const Chain& chain);

/// Curve of a level set classified as a single Jordan curve.
JordanCurve level_curve(const LevelSetResult& level);

/// Points of the level set whose distance to the subarc equals |eps|.
LevelSetResult level_subset_for_subarc(const JordanCurve& curve, const LevelSetResult& level, const Subarc& arc);

/// Points at unsigned distance eps from the union of a connected edge chain and a point list.
LevelSetResult eps_boundary_of_set(const std::vector<Edge>& chain, const std::vector<Point2>& points, double eps);

/// Same for a subarc of a curve (a degenerate subarc is a single point).
LevelSetResult eps_boundary_of_subarc(const JordanCurve& curve, const Subarc& arc, double eps);

/// Counts of segment and arc edges over all chains.
struct EdgeCensus {
  int segments = 0;
  int arcs = 0;
};
EdgeCensus census(const std::vector<Chain>& chains);

// ---- Grid oracle -----------------------------------------------------------

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

/// Iso-contour of a grid by marching squares. Ambiguous cells are resolved by `center_value` at the cell centre.
std::vector<Polyline> marching_squares(const ScalarGrid& grid, double iso,
                                       const std::function<double(Point2)>& center_value);

/// Sampling box for level-set work at eps: curve box grown by |eps| plus a few cells.
Box level_box(const JordanCurve& curve, double eps, double h);

/// Marching-squares contour of the sampled signed distance at eps.
std::vector<Polyline> level_set_grid(const JordanCurve& curve, double eps, double h,
                                     std::size_t cap = kDefaultGridCap, Exec exec = Exec::parallel);

/// Symmetric Hausdorff distance between exact chains and polylines, both sampled at spacing `step`.
double hausdorff_distance(const std::vector<Chain>& exact, const std::vector<Polyline>& approx, double step);

// ---- Components of the region beyond the level -----------------------------

struct DeltaComponents {
  double epsilon = 0.0;
  int count = 0;
  std::vector<Point2> representatives;
  bool validated = false;  // count agrees with the exact chain count
  double h = 0.0;
};

/// Connected components of {signed distance beyond eps} on a grid.
struct ComponentLabels {
  ScalarGrid grid;
  std::vector<int> label;  // -1 outside the region
  int count = 0;
};

ComponentLabels label_components(const JordanCurve& curve, double eps, double h, std::size_t cap = kDefaultGridCap);

/// Whether grid nodes nearest x and y are joined inside one component without leaving the disc B(x, radius).
bool connected_in_disk(const ComponentLabels& labels, Point2 x, Point2 y, double radius);

/// Component count by flood fill, cross-checked against exact chains and refined when they disagree.
DeltaComponents classify_components(const JordanCurve& curve, double eps, double h = 0.0,
                                    std::size_t cap = kDefaultGridCap);

}  // namespace lvl
