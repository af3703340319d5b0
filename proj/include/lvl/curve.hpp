#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lvl/geom.hpp"

namespace lvl {

/// A location on a curve: edge index plus parameter in [0,1] along that edge.
struct CurvePoint {
  int edge = 0;
  double t = 0.0;

  bool operator==(const CurvePoint&) const = default;
};

enum class SubarcDirection { forward, backward };

/// Closed subarc between two curve points. start == end denotes a degenerate point-arc.
struct Subarc {
  CurvePoint start;
  CurvePoint end;
  SubarcDirection direction = SubarcDirection::forward;
};

/// Closed chain of segment/arc edges. Edge i ends where edge i+1 starts.
class JordanCurve {
 public:
  JordanCurve() = default;
  explicit JordanCurve(std::vector<Edge> edges);

  static JordanCurve polygon(std::span<const Point2> vertices);

  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const Edge& edge(int i) const { return edges_[static_cast<size_t>(wrap(i))]; }
  [[nodiscard]] int wrap(int i) const {
    const int n = size();
    return ((i % n) + n) % n;
  }

  [[nodiscard]] double length() const { return cumulative_.back(); }
  [[nodiscard]] double diameter() const { return diameter_; }
  [[nodiscard]] const Box& bbox() const { return bbox_; }
  /// Effective tolerance scaled by the diameter.
  [[nodiscard]] double tolerance() const { return tol_; }
  [[nodiscard]] const std::vector<Box>& edge_boxes() const { return boxes_; }

  [[nodiscard]] Point2 point(CurvePoint p) const { return edge_at(edge(p.edge), p.t); }
  [[nodiscard]] double arclength(CurvePoint p) const;
  [[nodiscard]] CurvePoint at_arclength(double s) const;
  /// Edge start offsets: cumulative()[i] = arclength of vertex i, back() = total length.
  [[nodiscard]] const std::vector<double>& cumulative() const { return cumulative_; }
  /// Canonical form: t == 1 maps to t == 0 of the following edge.
  [[nodiscard]] CurvePoint canonical(CurvePoint p) const;

  [[nodiscard]] std::vector<Point2> vertices() const;
  [[nodiscard]] double signed_area() const;
  [[nodiscard]] JordanCurve reversed() const;
  /// Same point set, chain re-indexed to start at edge k.
  [[nodiscard]] JordanCurve rotated(int k) const;

 private:
  std::vector<Edge> edges_;
  std::vector<double> cumulative_{0.0};
  std::vector<Box> boxes_;
  Box bbox_;
  double diameter_ = 0.0;
  double tol_ = 1e-12;
};

// ---- Validation ----------------------------------------------------------

enum class Violation { none, empty, degenerate_edge, open_chain, self_intersection, negative_orientation };

struct ValidationReport {
  Violation kind = Violation::none;
  int edge_a = -1;
  int edge_b = -1;
  Point2 location;
  std::string message;

  [[nodiscard]] bool ok() const { return kind == Violation::none; }
};

/// Checks closure, simplicity (all edge pairs) and positive orientation; reports the first violation.
ValidationReport validate(const JordanCurve& curve);
/// Same check, reversing a negatively oriented but otherwise valid curve in place.
ValidationReport validate(JordanCurve& curve, bool auto_reverse);

std::string to_string(Violation v);

// ---- Subarcs -------------------------------------------------------------

/// Edges (or edge pieces) making up the subarc, in traversal order.
std::vector<Edge> subarc_pieces(const JordanCurve& curve, const Subarc& arc);
double subarc_length(const JordanCurve& curve, const Subarc& arc);
double subarc_diameter(const JordanCurve& curve, const Subarc& arc);
/// The complementary closed subarc (same endpoints, other way around).
Subarc complement(const Subarc& arc);

/// Diameter of a union of edges: hull of endpoint/extremal candidates plus farthest-point refinement on arcs.
double edges_diameter(std::span<const Edge> edges, std::span<const Point2> extra = {});

struct SubarcChoice {
  Subarc arc;
  bool tied = false;
  double measure = 0.0;        // diameter or length of the chosen subarc
  double other_measure = 0.0;  // same for the complement
};

/// The subarc connecting x and y with the smaller diameter.
SubarcChoice subarc_smaller_diameter(const JordanCurve& curve, CurvePoint x, CurvePoint y);
/// The component of curve minus {x,y} with the smaller length.
SubarcChoice shorter_subarc_by_length(const JordanCurve& curve, CurvePoint x, CurvePoint y);

// ---- Point location --------------------------------------------------------

enum class Side { inside, outside, on_boundary };

/// Winding-number test with arc-aware angle sums; boundary band = curve tolerance.
Side contains(const JordanCurve& curve, Point2 p);
/// Unsigned Euclidean distance to the curve, with the closest curve point.
double unsigned_distance(const JordanCurve& curve, Point2 p, CurvePoint* nearest = nullptr);
/// Winding number of the curve around p (p assumed off the curve).
int winding_number(const JordanCurve& curve, Point2 p);

/// Pairs of boxes overlapping within `pad`, found by a sweep over x.
std::vector<std::pair<int, int>> box_overlap_pairs(std::span<const Box> boxes, double pad);

}  // namespace lvl
