#include "lvl/distance_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lvl {

namespace {

// Parameters this close to 0 or 1 count as the shared vertex.
constexpr double kVertexParam = 1e-12;

std::string cap_message(std::size_t nodes, std::size_t cap, double required_h) {
  std::ostringstream os;
  os << "grid of " << nodes << " nodes exceeds cap " << cap << "; use h >= " << required_h;
  return os.str();
}

}  // namespace

SignedDistance signed_distance_info(const JordanCurve& curve, Point2 p) {
  SignedDistance out;
  CurvePoint q;
  const double d = unsigned_distance(curve, p, &q);
  out.nearest = q;
  if (d <= curve.tolerance()) {
    out.value = 0.0;
    out.side = Side::on_boundary;
    return out;
  }
  const Point2 u = p - curve.point(q);
  double s;
  if (q.t <= kVertexParam) {
    s = cross(edge_tangent(curve.edge(q.edge - 1), 1.0), u) + cross(edge_tangent(curve.edge(q.edge), 0.0), u);
  } else if (q.t >= 1.0 - kVertexParam) {
    s = cross(edge_tangent(curve.edge(q.edge), 1.0), u) + cross(edge_tangent(curve.edge(q.edge + 1), 0.0), u);
  } else {
    s = cross(edge_tangent(curve.edge(q.edge), q.t), u);
  }
  if (s == 0.0) s = winding_number(curve, p) != 0 ? 1.0 : -1.0;
  out.side = s > 0 ? Side::inside : Side::outside;
  out.value = s > 0 ? d : -d;
  return out;
}

double signed_distance(const JordanCurve& curve, Point2 p) { return signed_distance_info(curve, p).value; }

NearestPointSet nearest_points(const JordanCurve& curve, Point2 p, double tol_multiplier) {
  NearestPointSet out;
  out.query = p;
  const double tol = curve.tolerance();
  out.distance = unsigned_distance(curve, p);
  const double reach = out.distance * (1.0 + tol_multiplier) + tol;
  std::vector<CurvePoint> cand;
  const auto& boxes = curve.edge_boxes();
  for (int i = 0; i < curve.size(); ++i) {
    if (boxes[static_cast<size_t>(i)].distance(p) > reach) continue;
    const Edge& e = curve.edge(i);
    const Closest c = closest_on_edge(p, e);
    if (c.distance <= reach) cand.push_back({i, c.t});
    if (const auto* a = std::get_if<CircularArc>(&e)) {
      if (dist(p, a->center) <= tol && a->radius <= reach) {
        out.continuum = true;
        cand.push_back({i, 0.5});
      }
      if (dist(p, a->at(0.0)) <= reach) cand.push_back({i, 0.0});
      if (dist(p, a->at(1.0)) <= reach) cand.push_back({i, 1.0});
    }
  }
  const double merge = 4 * tol;
  std::vector<Point2> kept;
  for (const auto& c : cand) {
    const CurvePoint cp = curve.canonical(c);
    const Point2 pt = curve.point(cp);
    bool dup = false;
    for (const auto& k : kept) {
      if (dist(k, pt) <= merge) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      kept.push_back(pt);
      out.points.push_back(cp);
    }
  }
  return out;
}

double angular_span(Point2 center, const std::vector<Point2>& pts) {
  if (pts.size() < 2) return 0.0;
  std::vector<double> ang;
  ang.reserve(pts.size());
  for (const auto& q : pts) {
    const Point2 v = q - center;
    ang.push_back(wrap_angle(std::atan2(v.y, v.x)));
  }
  std::sort(ang.begin(), ang.end());
  // The covering sector is the complement of the largest gap between consecutive directions.
  double gap = ang.front() + kTwoPi - ang.back();
  for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
  return kTwoPi - gap;
}

GridCapExceeded::GridCapExceeded(std::size_t n, std::size_t cap, double rh)
    : std::runtime_error(cap_message(n, cap, rh)), nodes(n), required_h(rh) {}

std::pair<int, int> grid_dims(const Box& box, double h) {
  const int nx = static_cast<int>(std::floor((box.xmax - box.xmin) / h + 1e-9)) + 1;
  const int ny = static_cast<int>(std::floor((box.ymax - box.ymin) / h + 1e-9)) + 1;
  return {nx, ny};
}

ScalarGrid grid_sample(const JordanCurve& curve, const Box& box, double h, std::size_t cap, Exec exec) {
  if (!(h > 0)) throw std::invalid_argument("grid_sample: h must be positive");
  const double w = box.xmax - box.xmin;
  const double ht = box.ymax - box.ymin;
  const double nxd = std::floor(w / h + 1e-9) + 1;
  const double nyd = std::floor(ht / h + 1e-9) + 1;
  if (nxd * nyd > static_cast<double>(cap)) {
    // Solve (w/h + 1)(ht/h + 1) <= cap for h.
    const double a = static_cast<double>(cap) - 1.0;
    const double b = w + ht;
    const double c = w * ht;
    const double required = (b + std::sqrt(b * b + 4 * a * c)) / (2 * a);
    throw GridCapExceeded(static_cast<std::size_t>(nxd * nyd), cap, required);
  }
  ScalarGrid g;
  g.origin = {box.xmin, box.ymin};
  g.h = h;
  g.nx = static_cast<int>(nxd);
  g.ny = static_cast<int>(nyd);
  const long long total = static_cast<long long>(g.nx) * g.ny;
  g.values.assign(static_cast<size_t>(total), 0.0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long long k = 0; k < total; ++k) {
      g.values[static_cast<size_t>(k)] = signed_distance(curve, g.node(static_cast<int>(k % g.nx), static_cast<int>(k / g.nx)));
    }
  } else {
    for (long long k = 0; k < total; ++k) {
      g.values[static_cast<size_t>(k)] = signed_distance(curve, g.node(static_cast<int>(k % g.nx), static_cast<int>(k / g.nx)));
    }
  }
  return g;
}

double set_distance(const std::vector<Edge>& edges, const std::vector<Point2>& points, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : edges) best = std::min(best, dist_point_primitive(p, e));
  for (const auto& q : points) best = std::min(best, dist(p, q));
  return best;
}

}  // namespace lvl
