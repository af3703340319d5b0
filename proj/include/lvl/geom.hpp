#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

namespace lvl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Point2&) const = default;
};

constexpr Point2 operator*(double s, Point2 p) { return p * s; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
constexpr Point2 perp_left(Point2 a) { return {-a.y, a.x}; }
inline Point2 unit(Point2 a) { return a / norm(a); }
inline Point2 polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }
inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Wraps an angle into [0, 2pi).
double wrap_angle(double a);

/// Effective tolerance: max(eps_abs, eps_rel * scale), scale being the curve diameter.
struct Tolerance {
  double eps_abs = 1e-12;
  double eps_rel = 1e-9;

  [[nodiscard]] double effective(double scale) const { return std::max(eps_abs, eps_rel * scale); }
};

struct Segment {
  Point2 a;
  Point2 b;

  [[nodiscard]] double length() const { return dist(a, b); }
  [[nodiscard]] Point2 at(double t) const { return a + (b - a) * t; }
  [[nodiscard]] Point2 direction() const { return unit(b - a); }
};

enum class ArcDirection { ccw, cw };

/// Circular arc by center, radius, start angle and signed sweep.
/// Positive sweep runs counter-clockwise. |sweep| lies in (0, 2pi].
struct CircularArc {
  Point2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = kTwoPi;

  static CircularArc from_angles(Point2 center, double radius, double start_angle, double end_angle,
                                 ArcDirection dir);

  [[nodiscard]] double end_angle() const { return start_angle + sweep; }
  [[nodiscard]] ArcDirection direction() const { return sweep >= 0 ? ArcDirection::ccw : ArcDirection::cw; }
  [[nodiscard]] double length() const { return radius * std::abs(sweep); }
  [[nodiscard]] double angle_at(double t) const { return start_angle + sweep * t; }
  [[nodiscard]] Point2 at(double t) const { return center + polar(radius, angle_at(t)); }
  [[nodiscard]] bool full_circle() const { return std::abs(sweep) >= kTwoPi - 1e-14; }
  /// Parameter in [0,1] of the point at `angle` if the direction lies within the sweep.
  [[nodiscard]] std::optional<double> param_of_angle(double angle, double slack = 0.0) const;
};

struct Line {
  Point2 p;
  Point2 dir;  // unit

  static Line through(Point2 a, Point2 b) { return {a, unit(b - a)}; }
};

using Edge = std::variant<Segment, CircularArc>;

// ---- Edge helpers -------------------------------------------------------

Point2 edge_start(const Edge& e);
Point2 edge_end(const Edge& e);
Point2 edge_at(const Edge& e, double t);
double edge_length(const Edge& e);
/// Unit tangent in the traversal direction.
Point2 edge_tangent(const Edge& e, double t);
Edge edge_reversed(const Edge& e);
/// Sub-edge over parameters [t0, t1] (t0 < t1).
Edge edge_sub(const Edge& e, double t0, double t1);
bool is_arc(const Edge& e);

struct Box {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;

  [[nodiscard]] bool overlaps(const Box& o, double pad) const {
    return xmin - pad <= o.xmax && o.xmin - pad <= xmax && ymin - pad <= o.ymax && o.ymin - pad <= ymax;
  }
  void expand(Point2 p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  /// Euclidean distance from p to the box (0 inside).
  [[nodiscard]] double distance(Point2 p) const {
    const double dx = std::max({xmin - p.x, 0.0, p.x - xmax});
    const double dy = std::max({ymin - p.y, 0.0, p.y - ymax});
    return std::hypot(dx, dy);
  }
};

Box edge_box(const Edge& e);

/// Arc points where the tangent is axis-aligned, plus the endpoints.
std::vector<Point2> edge_extremal_candidates(const Edge& e);

// ---- Distances ----------------------------------------------------------

struct Closest {
  double distance;
  double t;  // parameter on the primitive
  Point2 point;
};

Closest closest_on_segment(Point2 p, const Segment& s);
Closest closest_on_arc(Point2 p, const CircularArc& a);
Closest closest_on_edge(Point2 p, const Edge& e);

double dist_point_primitive(Point2 p, const Segment& s);
double dist_point_primitive(Point2 p, const CircularArc& a);
double dist_point_primitive(Point2 p, const Line& l);
double dist_point_primitive(Point2 p, const Edge& e);

/// Largest distance from the line to any point of the edge.
double max_dist_to_line(const Edge& e, const Line& l);

// ---- Intersections -----------------------------------------------------

struct IntersectionPoint {
  Point2 point;
  double t1;  // parameter on the first primitive
  double t2;  // parameter on the second primitive
  bool tangential = false;
};

struct OverlapInterval {
  double t1_begin, t1_end;  // on the first primitive, ascending
  double t2_begin, t2_end;  // matching parameters on the second (not necessarily ascending)
};

struct IntersectionResult {
  std::vector<IntersectionPoint> points;
  std::vector<OverlapInterval> overlaps;

  [[nodiscard]] bool empty() const { return points.empty() && overlaps.empty(); }
};

/// All intersections of two primitives within tolerance `tol` (absolute length).
IntersectionResult intersect(const Edge& e1, const Edge& e2, double tol);

enum class Orientation { left, right, collinear };

Orientation orientation(Point2 a, Point2 b, Point2 c, double tol = 1e-12);

}  // namespace lvl
