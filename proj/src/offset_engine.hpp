#pragma once

// Shared machinery for level sets and epsilon-boundaries: split candidate primitives at their mutual
// intersections, keep the pieces lying on the target level, and stitch them into chains.

#include <array>
#include <functional>
#include <vector>

#include "lvl/level_set.hpp"

namespace lvl::detail {

struct Candidates {
  std::vector<Edge> prims;
  std::vector<Point2> points;  // zero-radius offsets
};

/// Offsets of a closed curve at distance d: both sides of each edge, plus vertex arcs restricted to the
/// directions in which the vertex can be the nearest point.
Candidates curve_candidates(const JordanCurve& curve, double d, double tol);

/// Offsets of a connected open chain (possibly empty) and a point list at distance d.
Candidates set_candidates(const std::vector<Edge>& chain, const std::vector<Point2>& points, double d, double tol);

/// Splits `prims` at intersections with `cutters` (with each other when cutters is null).
/// Pieces of length <= min_len are dropped. Intersection locations are appended to `vertices`.
std::vector<Edge> split_pieces(const std::vector<Edge>& prims, const std::vector<Edge>* cutters, double tol,
                               double min_len, Exec exec, std::vector<Point2>* vertices);

/// Keeps pieces whose midpoint and endpoints satisfy |field - target| <= tol.
std::vector<Edge> trim_pieces(const std::vector<Edge>& pieces, const std::function<double(Point2)>& field,
                              double target, double tol, Exec exec);

/// Removes pieces coinciding with an earlier one (either orientation).
std::vector<Edge> dedupe_pieces(const std::vector<Edge>& pieces, double radius);

struct Graph {
  std::vector<Point2> nodes;
  std::vector<std::array<int, 2>> ends;  // node ids of each piece's start and end
  std::vector<int> degree;
};

Graph stitch(const std::vector<Edge>& pieces, double radius);

/// Number of connected components of the piece graph.
int graph_components(const Graph& g);

/// Maximal chains: paths between nodes of degree != 2, and cycles.
std::vector<Chain> extract_chains(const Graph& g, const std::vector<Edge>& pieces, double tol);

struct Assembly {
  std::vector<Edge> pieces;
  std::vector<Point2> vertices;  // arrangement vertices and point candidates
};

/// Builds the result from trimmed pieces. `tip_ok` certifies open ends; when empty, open ends are allowed.
LevelSetResult assemble(double eps, const Assembly& a, const std::function<double(Point2)>& field, double target,
                        double tol, const std::function<bool(Point2)>& tip_ok);

}  // namespace lvl::detail
