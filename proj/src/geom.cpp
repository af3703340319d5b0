#include "lvl/geom.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lvl {

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

CircularArc CircularArc::from_angles(Point2 center, double radius, double start_angle, double end_angle,
                                     ArcDirection dir) {
  double sweep = end_angle - start_angle;
  if (dir == ArcDirection::ccw) {
    while (sweep <= 0) sweep += kTwoPi;
    while (sweep > kTwoPi + 1e-12) sweep -= kTwoPi;
  } else {
    while (sweep >= 0) sweep -= kTwoPi;
    while (sweep < -kTwoPi - 1e-12) sweep += kTwoPi;
  }
  return {center, radius, start_angle, sweep};
}

std::optional<double> CircularArc::param_of_angle(double angle, double slack) const {
  const double span = std::abs(sweep);
  if (full_circle()) {
    const double d = sweep > 0 ? wrap_angle(angle - start_angle) : wrap_angle(start_angle - angle);
    return d / span;
  }
  const double d = sweep > 0 ? wrap_angle(angle - start_angle) : wrap_angle(start_angle - angle);
  if (d <= span) return d / span;
  if (d <= span + slack) return 1.0;
  if (d >= kTwoPi - slack) return 0.0;
  return std::nullopt;
}

// ---- Edge helpers -------------------------------------------------------

Point2 edge_start(const Edge& e) { return edge_at(e, 0.0); }
Point2 edge_end(const Edge& e) { return edge_at(e, 1.0); }

Point2 edge_at(const Edge& e, double t) {
  return std::visit([t](const auto& p) { return p.at(t); }, e);
}

double edge_length(const Edge& e) {
  return std::visit([](const auto& p) { return p.length(); }, e);
}

Point2 edge_tangent(const Edge& e, double t) {
  if (const auto* s = std::get_if<Segment>(&e)) return s->direction();
  const auto& a = std::get<CircularArc>(e);
  const Point2 radial = polar(1.0, a.angle_at(t));
  return a.sweep > 0 ? perp_left(radial) : -perp_left(radial);
}

Edge edge_reversed(const Edge& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return Segment{s->b, s->a};
  const auto& a = std::get<CircularArc>(e);
  return CircularArc{a.center, a.radius, a.end_angle(), -a.sweep};
}

Edge edge_sub(const Edge& e, double t0, double t1) {
  if (const auto* s = std::get_if<Segment>(&e)) {
    // Keep the exact endpoints when the full range is requested.
    const Point2 a = t0 == 0.0 ? s->a : s->at(t0);
    const Point2 b = t1 == 1.0 ? s->b : s->at(t1);
    return Segment{a, b};
  }
  const auto& a = std::get<CircularArc>(e);
  return CircularArc{a.center, a.radius, a.angle_at(t0), a.sweep * (t1 - t0)};
}

bool is_arc(const Edge& e) { return std::holds_alternative<CircularArc>(e); }

Box edge_box(const Edge& e) {
  const auto pts = edge_extremal_candidates(e);
  Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) b.expand(p);
  return b;
}

std::vector<Point2> edge_extremal_candidates(const Edge& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return {s->a, s->b};
  const auto& a = std::get<CircularArc>(e);
  std::vector<Point2> out{a.at(0.0), a.at(1.0)};
  for (int k = 0; k < 4; ++k) {
    const double ang = k * kPi / 2;
    if (a.param_of_angle(ang)) out.push_back(a.center + polar(a.radius, ang));
  }
  return out;
}

// ---- Distances ----------------------------------------------------------

Closest closest_on_segment(Point2 p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  double t = len2 > 0 ? dot(p - s.a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Point2 q = t == 0.0 ? s.a : (t == 1.0 ? s.b : s.at(t));
  return {dist(p, q), t, q};
}

Closest closest_on_arc(Point2 p, const CircularArc& a) {
  const Point2 v = p - a.center;
  const double r = norm(v);
  if (r < 1e-300) {
    return {a.radius, 0.0, a.at(0.0)};
  }
  if (auto t = a.param_of_angle(std::atan2(v.y, v.x))) {
    return {std::abs(r - a.radius), *t, a.center + v * (a.radius / r)};
  }
  const Point2 s = a.at(0.0);
  const Point2 e = a.at(1.0);
  const double ds = dist(p, s);
  const double de = dist(p, e);
  return ds <= de ? Closest{ds, 0.0, s} : Closest{de, 1.0, e};
}

Closest closest_on_edge(Point2 p, const Edge& e) {
  if (const auto* s = std::get_if<Segment>(&e)) return closest_on_segment(p, *s);
  return closest_on_arc(p, std::get<CircularArc>(e));
}

double dist_point_primitive(Point2 p, const Segment& s) { return closest_on_segment(p, s).distance; }
double dist_point_primitive(Point2 p, const CircularArc& a) { return closest_on_arc(p, a).distance; }
double dist_point_primitive(Point2 p, const Line& l) { return std::abs(cross(l.dir, p - l.p)); }
double dist_point_primitive(Point2 p, const Edge& e) { return closest_on_edge(p, e).distance; }

double max_dist_to_line(const Edge& e, const Line& l) {
  auto d = [&](Point2 q) { return std::abs(cross(l.dir, q - l.p)); };
  if (const auto* s = std::get_if<Segment>(&e)) return std::max(d(s->a), d(s->b));
  const auto& a = std::get<CircularArc>(e);
  double m = std::max(d(a.at(0.0)), d(a.at(1.0)));
  const Point2 n = perp_left(l.dir);
  const double ang = std::atan2(n.y, n.x);
  for (double cand : {ang, ang + kPi}) {
    if (a.param_of_angle(cand)) m = std::max(m, d(a.center + polar(a.radius, cand)));
  }
  return m;
}

// ---- Intersections -----------------------------------------------------

namespace {

struct CircleView {
  Point2 c;
  double r;
};

// Keeps one representative for points closer than tol; a tangential flag wins.
void dedupe(std::vector<IntersectionPoint>& pts, double tol) {
  std::vector<IntersectionPoint> out;
  for (const auto& p : pts) {
    bool merged = false;
    for (auto& q : out) {
      if (dist(p.point, q.point) <= tol) {
        q.tangential = q.tangential || p.tangential;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(p);
  }
  pts = std::move(out);
}

// Parameter of point q (known to lie near the primitive) on the primitive.
double param_on(const Edge& e, Point2 q) { return closest_on_edge(q, e).t; }

void add_endpoint_contacts(const Edge& e1, const Edge& e2, double tol, std::vector<IntersectionPoint>& out) {
  for (double t : {0.0, 1.0}) {
    const Point2 p = edge_at(e1, t);
    const Closest c = closest_on_edge(p, e2);
    if (c.distance <= tol) out.push_back({p, t, c.t, false});
  }
  for (double t : {0.0, 1.0}) {
    const Point2 p = edge_at(e2, t);
    const Closest c = closest_on_edge(p, e1);
    if (c.distance <= tol) out.push_back({p, c.t, t, false});
  }
}

IntersectionResult seg_seg(const Segment& s1, const Segment& s2, double tol) {
  IntersectionResult res;
  const Point2 r = s1.b - s1.a;
  const Point2 s = s2.b - s2.a;
  const double lr = norm(r);
  const double ls = norm(s);
  const double denom = cross(r, s);
  const bool parallel = std::abs(denom) <= 1e-14 * lr * ls;
  if (parallel) {
    const double off = std::abs(cross(r, s2.a - s1.a)) / lr;
    if (off <= tol) {
      double u0 = dot(s2.a - s1.a, r) / (lr * lr);
      double u1 = dot(s2.b - s1.a, r) / (lr * lr);
      const bool flipped = u0 > u1;
      const double lo = std::max(0.0, std::min(u0, u1));
      const double hi = std::min(1.0, std::max(u0, u1));
      if ((hi - lo) * lr > tol) {
        auto on2 = [&](double u) { return param_on(Edge{s2}, s1.at(u)); };
        (void)flipped;
        res.overlaps.push_back({lo, hi, on2(lo), on2(hi)});
        return res;
      }
    }
    std::vector<IntersectionPoint> pts;
    add_endpoint_contacts(Edge{s1}, Edge{s2}, tol, pts);
    for (auto& p : pts) p.tangential = off <= tol;
    dedupe(pts, tol);
    res.points = std::move(pts);
    return res;
  }
  std::vector<IntersectionPoint> pts;
  const double t = cross(s2.a - s1.a, s) / denom;
  const double u = cross(s2.a - s1.a, r) / denom;
  const double st = tol / lr;
  const double su = tol / ls;
  if (t >= -st && t <= 1 + st && u >= -su && u <= 1 + su) {
    const double tc = std::clamp(t, 0.0, 1.0);
    const double uc = std::clamp(u, 0.0, 1.0);
    pts.push_back({s1.at(tc), tc, uc, false});
  }
  add_endpoint_contacts(Edge{s1}, Edge{s2}, tol, pts);
  dedupe(pts, tol);
  res.points = std::move(pts);
  return res;
}

// Points where the segment meets the supporting circle of the arc, filtered by the arc's sweep.
IntersectionResult seg_arc(const Segment& s, const CircularArc& a, double tol) {
  IntersectionResult res;
  std::vector<IntersectionPoint> pts;
  const Point2 d = s.b - s.a;
  const double len = norm(d);
  const Point2 u = d / len;
  const double foot_t = dot(a.center - s.a, u);  // line coordinate of the foot
  const Point2 foot = s.a + u * foot_t;
  const double h = dist(a.center, foot);
  const double slack_t = tol / len;
  const double slack_ang = tol / a.radius;
  auto try_add = [&](double line_coord, bool tangential) {
    const double t = line_coord / len;
    if (t < -slack_t || t > 1 + slack_t) return;
    const double tc = std::clamp(t, 0.0, 1.0);
    const Point2 q = s.at(tc);
    const Point2 v = q - a.center;
    auto ta = a.param_of_angle(std::atan2(v.y, v.x), slack_ang);
    if (!ta) return;
    pts.push_back({q, tc, *ta, tangential});
  };
  if (std::abs(h - a.radius) <= tol) {
    try_add(foot_t, true);
  } else if (h < a.radius) {
    const double w = std::sqrt(a.radius * a.radius - h * h);
    try_add(foot_t - w, false);
    try_add(foot_t + w, false);
  }
  add_endpoint_contacts(Edge{s}, Edge{a}, tol, pts);
  dedupe(pts, tol);
  res.points = std::move(pts);
  return res;
}

// Ccw angular interval [lo, lo + span] covered by an arc.
std::pair<double, double> ccw_interval(const CircularArc& a) {
  if (a.sweep > 0) return {wrap_angle(a.start_angle), a.sweep};
  return {wrap_angle(a.end_angle()), -a.sweep};
}

IntersectionResult arc_arc(const CircularArc& a1, const CircularArc& a2, double tol) {
  IntersectionResult res;
  std::vector<IntersectionPoint> pts;
  const double d = dist(a1.center, a2.center);
  if (d <= tol && std::abs(a1.radius - a2.radius) <= tol) {
    // Cocircular: intersect the angular intervals.
    auto [lo1, span1] = ccw_interval(a1);
    auto [lo2, span2] = ccw_interval(a2);
    const double r = a1.radius;
    std::vector<std::pair<double, double>> ivs;  // ccw absolute angles, relative to lo1
    double off = wrap_angle(lo2 - lo1);
    for (double shift : {off - kTwoPi, off, off + kTwoPi}) {
      const double b = std::max(0.0, shift);
      const double e = std::min(span1, shift + span2);
      if (e >= b - tol / r) ivs.emplace_back(b, std::max(b, e));
    }
    for (auto [b, e] : ivs) {
      auto t1_of = [&](double rel) {
        return a1.sweep > 0 ? rel / span1 : 1.0 - rel / span1;
      };
      auto t2_of = [&](double rel) {
        const double ang = lo1 + rel;
        return a2.param_of_angle(ang, tol / r).value_or(0.0);
      };
      if ((e - b) * r > tol) {
        double tb = t1_of(b), te = t1_of(e);
        double ub = t2_of(b), ue = t2_of(e);
        if (tb > te) {
          std::swap(tb, te);
          std::swap(ub, ue);
        }
        res.overlaps.push_back({tb, te, ub, ue});
      } else {
        const double m = 0.5 * (b + e);
        pts.push_back({a1.center + polar(r, lo1 + m), t1_of(m), t2_of(m), true});
      }
    }
    dedupe(pts, tol);
    res.points = std::move(pts);
    return res;
  }
  const double slack1 = tol / a1.radius;
  const double slack2 = tol / a2.radius;
  auto try_add = [&](Point2 q, bool tangential) {
    const Point2 v1 = q - a1.center;
    const Point2 v2 = q - a2.center;
    auto t1 = a1.param_of_angle(std::atan2(v1.y, v1.x), slack1);
    auto t2 = a2.param_of_angle(std::atan2(v2.y, v2.x), slack2);
    if (t1 && t2) pts.push_back({q, *t1, *t2, tangential});
  };
  if (d > tol) {
    const Point2 u = (a2.center - a1.center) / d;
    const double sum = a1.radius + a2.radius;
    const double diff = std::abs(a1.radius - a2.radius);
    if (std::abs(d - sum) <= tol) {
      try_add(a1.center + u * a1.radius, true);
    } else if (std::abs(d - diff) <= tol) {
      const Point2 dir = a1.radius >= a2.radius ? u : -u;
      try_add(a1.center + dir * a1.radius, true);
    } else if (d < sum && d > diff) {
      const double x = (d * d + a1.radius * a1.radius - a2.radius * a2.radius) / (2 * d);
      const double h = std::sqrt(std::max(0.0, a1.radius * a1.radius - x * x));
      const Point2 base = a1.center + u * x;
      try_add(base + perp_left(u) * h, false);
      try_add(base - perp_left(u) * h, false);
    }
  }
  add_endpoint_contacts(Edge{a1}, Edge{a2}, tol, pts);
  dedupe(pts, tol);
  res.points = std::move(pts);
  return res;
}

IntersectionResult swapped(IntersectionResult r) {
  for (auto& p : r.points) std::swap(p.t1, p.t2);
  for (auto& o : r.overlaps) {
    OverlapInterval n{o.t2_begin, o.t2_end, o.t1_begin, o.t1_end};
    if (n.t1_begin > n.t1_end) {
      std::swap(n.t1_begin, n.t1_end);
      std::swap(n.t2_begin, n.t2_end);
    }
    o = n;
  }
  return r;
}

}  // namespace

IntersectionResult intersect(const Edge& e1, const Edge& e2, double tol) {
  const auto* s1 = std::get_if<Segment>(&e1);
  const auto* s2 = std::get_if<Segment>(&e2);
  if (s1 && s2) return seg_seg(*s1, *s2, tol);
  if (s1) return seg_arc(*s1, std::get<CircularArc>(e2), tol);
  if (s2) return swapped(seg_arc(*s2, std::get<CircularArc>(e1), tol));
  return arc_arc(std::get<CircularArc>(e1), std::get<CircularArc>(e2), tol);
}

Orientation orientation(Point2 a, Point2 b, Point2 c, double tol) {
  const double cr = cross(b - a, c - a);
  const double scale = std::max(norm(b - a), norm(c - a));
  if (std::abs(cr) <= tol * std::max(scale, 1e-300)) return Orientation::collinear;
  return cr > 0 ? Orientation::left : Orientation::right;
}

}  // namespace lvl
