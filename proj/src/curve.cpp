#include "lvl/curve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lvl {

namespace {

// Number of evenly spaced directions sampled on arcs for diameter candidates.
constexpr int kArcDirections = 16;

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> h(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct FarPair {
  double d = 0.0;
  Point2 p, q;
};

FarPair farthest_pair(const std::vector<Point2>& pts) {
  const auto hull = convex_hull(pts);
  FarPair best;
  if (hull.empty()) return best;
  best.p = best.q = hull[0];
  for (size_t i = 0; i < hull.size(); ++i) {
    for (size_t j = i + 1; j < hull.size(); ++j) {
      const double d = dist(hull[i], hull[j]);
      if (d > best.d) best = {d, hull[i], hull[j]};
    }
  }
  return best;
}

}  // namespace

// ---- JordanCurve ---------------------------------------------------------

JordanCurve::JordanCurve(std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (edges_.empty()) throw std::invalid_argument("JordanCurve: no edges");
  cumulative_.clear();
  cumulative_.reserve(edges_.size() + 1);
  cumulative_.push_back(0.0);
  boxes_.reserve(edges_.size());
  for (const auto& e : edges_) {
    cumulative_.push_back(cumulative_.back() + edge_length(e));
    boxes_.push_back(edge_box(e));
  }
  bbox_ = boxes_[0];
  for (const auto& b : boxes_) {
    bbox_.expand({b.xmin, b.ymin});
    bbox_.expand({b.xmax, b.ymax});
  }
  diameter_ = edges_diameter(edges_);
  tol_ = Tolerance{}.effective(diameter_);
}

JordanCurve JordanCurve::polygon(std::span<const Point2> vertices) {
  std::vector<Edge> edges;
  edges.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    edges.emplace_back(Segment{vertices[i], vertices[(i + 1) % vertices.size()]});
  }
  return JordanCurve(std::move(edges));
}

double JordanCurve::arclength(CurvePoint p) const {
  const int e = wrap(p.edge);
  return cumulative_[static_cast<size_t>(e)] + std::clamp(p.t, 0.0, 1.0) * edge_length(edges_[static_cast<size_t>(e)]);
}

CurvePoint JordanCurve::at_arclength(double s) const {
  const double total = length();
  s = std::fmod(s, total);
  if (s < 0) s += total;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  int e = static_cast<int>(it - cumulative_.begin()) - 1;
  e = std::clamp(e, 0, size() - 1);
  const double len = edge_length(edges_[static_cast<size_t>(e)]);
  const double t = len > 0 ? (s - cumulative_[static_cast<size_t>(e)]) / len : 0.0;
  return canonical({e, std::clamp(t, 0.0, 1.0)});
}

CurvePoint JordanCurve::canonical(CurvePoint p) const {
  p.edge = wrap(p.edge);
  if (p.t >= 1.0) return {wrap(p.edge + 1), 0.0};
  if (p.t < 0.0) p.t = 0.0;
  return p;
}

std::vector<Point2> JordanCurve::vertices() const {
  std::vector<Point2> v;
  v.reserve(edges_.size());
  for (const auto& e : edges_) v.push_back(edge_start(e));
  return v;
}

double JordanCurve::signed_area() const {
  double twice = 0.0;
  for (const auto& e : edges_) {
    if (const auto* s = std::get_if<Segment>(&e)) {
      twice += cross(s->a, s->b);
    } else {
      const auto& a = std::get<CircularArc>(e);
      const Point2 p0 = a.at(0.0);
      const Point2 p1 = a.at(1.0);
      twice += a.center.x * (p1.y - p0.y) - a.center.y * (p1.x - p0.x) + a.radius * a.radius * a.sweep;
    }
  }
  return 0.5 * twice;
}

JordanCurve JordanCurve::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) rev.push_back(edge_reversed(*it));
  return JordanCurve(std::move(rev));
}

JordanCurve JordanCurve::rotated(int k) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (int i = 0; i < size(); ++i) out.push_back(edge(i + k));
  return JordanCurve(std::move(out));
}

// ---- Validation ----------------------------------------------------------

std::string to_string(Violation v) {
  switch (v) {
    case Violation::none: return "ok";
    case Violation::empty: return "empty";
    case Violation::degenerate_edge: return "degenerate edge";
    case Violation::open_chain: return "open chain";
    case Violation::self_intersection: return "self-intersection";
    case Violation::negative_orientation: return "negative orientation";
  }
  return "unknown";
}

std::vector<std::pair<int, int>> box_overlap_pairs(std::span<const Box> boxes, double pad) {
  std::vector<int> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return boxes[static_cast<size_t>(a)].xmin < boxes[static_cast<size_t>(b)].xmin; });
  std::vector<std::pair<int, int>> out;
  std::vector<int> active;
  for (int idx : order) {
    const Box& b = boxes[static_cast<size_t>(idx)];
    std::erase_if(active, [&](int a) { return boxes[static_cast<size_t>(a)].xmax + pad < b.xmin; });
    for (int a : active) {
      if (boxes[static_cast<size_t>(a)].overlaps(b, pad)) out.emplace_back(std::min(a, idx), std::max(a, idx));
    }
    active.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate(const JordanCurve& curve) {
  ValidationReport r;
  const int n = curve.size();
  if (n == 0) {
    r.kind = Violation::empty;
    r.message = "curve has no edges";
    return r;
  }
  const double tol = curve.tolerance();
  for (int i = 0; i < n; ++i) {
    if (edge_length(curve.edge(i)) <= tol) {
      r.kind = Violation::degenerate_edge;
      r.edge_a = i;
      r.location = edge_start(curve.edge(i));
      r.message = "edge " + std::to_string(i) + " has length below tolerance";
      return r;
    }
  }
  for (int i = 0; i < n; ++i) {
    const Point2 e = edge_end(curve.edge(i));
    const Point2 s = edge_start(curve.edge(i + 1));
    if (dist(e, s) > tol) {
      r.kind = Violation::open_chain;
      r.edge_a = i;
      r.edge_b = curve.wrap(i + 1);
      r.location = e;
      r.message = "chain break after edge " + std::to_string(i);
      return r;
    }
  }
  const double near_vertex = 8 * tol;
  for (auto [i, j] : box_overlap_pairs(curve.edge_boxes(), tol)) {
    const bool next = curve.wrap(i + 1) == j;   // end of i meets start of j
    const bool prev = curve.wrap(j + 1) == i;   // end of j meets start of i
    const auto res = intersect(curve.edge(i), curve.edge(j), tol);
    auto report = [&](Point2 where) {
      r.kind = Violation::self_intersection;
      r.edge_a = i;
      r.edge_b = j;
      r.location = where;
      std::ostringstream os;
      os << "edges " << i << " and " << j << " intersect at (" << where.x << ", " << where.y << ")";
      r.message = os.str();
      return r;
    };
    if (!res.overlaps.empty()) {
      const auto& o = res.overlaps.front();
      return report(edge_at(curve.edge(i), 0.5 * (o.t1_begin + o.t1_end)));
    }
    for (const auto& p : res.points) {
      bool shared = false;
      if (next && dist(p.point, edge_end(curve.edge(i))) <= near_vertex) shared = true;
      if (prev && dist(p.point, edge_start(curve.edge(i))) <= near_vertex) shared = true;
      if (!shared) return report(p.point);
    }
  }
  if (curve.signed_area() <= 0) {
    r.kind = Violation::negative_orientation;
    r.message = "curve is clockwise";
    return r;
  }
  return r;
}

ValidationReport validate(JordanCurve& curve, bool auto_reverse) {
  auto r = validate(curve);
  if (r.kind == Violation::negative_orientation && auto_reverse) {
    curve = curve.reversed();
    r = validate(curve);
  }
  return r;
}

// ---- Subarcs -------------------------------------------------------------

Subarc complement(const Subarc& arc) {
  return {arc.start, arc.end,
          arc.direction == SubarcDirection::forward ? SubarcDirection::backward : SubarcDirection::forward};
}

namespace {

std::vector<Edge> forward_pieces(const JordanCurve& curve, CurvePoint p, CurvePoint q) {
  p = curve.canonical(p);
  q = curve.canonical(q);
  std::vector<Edge> out;
  if (p == q) return out;
  if (p.edge == q.edge && p.t < q.t) {
    out.push_back(edge_sub(curve.edge(p.edge), p.t, q.t));
    return out;
  }
  out.push_back(p.t == 0.0 ? curve.edge(p.edge) : edge_sub(curve.edge(p.edge), p.t, 1.0));
  for (int k = p.edge + 1; curve.wrap(k) != q.edge; ++k) out.push_back(curve.edge(k));
  if (q.t > 0.0) out.push_back(edge_sub(curve.edge(q.edge), 0.0, q.t));
  return out;
}

}  // namespace

std::vector<Edge> subarc_pieces(const JordanCurve& curve, const Subarc& arc) {
  if (arc.direction == SubarcDirection::forward) return forward_pieces(curve, arc.start, arc.end);
  auto pieces = forward_pieces(curve, arc.end, arc.start);
  std::reverse(pieces.begin(), pieces.end());
  for (auto& e : pieces) e = edge_reversed(e);
  return pieces;
}

double subarc_length(const JordanCurve& curve, const Subarc& arc) {
  const CurvePoint p = curve.canonical(arc.start);
  const CurvePoint q = curve.canonical(arc.end);
  if (p == q) return 0.0;
  const double L = curve.length();
  const double sp = curve.arclength(p);
  const double sq = curve.arclength(q);
  double d = arc.direction == SubarcDirection::forward ? sq - sp : sp - sq;
  d = std::fmod(d, L);
  if (d < 0) d += L;
  return d;
}

double edges_diameter(std::span<const Edge> edges, std::span<const Point2> extra) {
  std::vector<Point2> cand(extra.begin(), extra.end());
  std::vector<const CircularArc*> arcs;
  for (const auto& e : edges) {
    cand.push_back(edge_start(e));
    cand.push_back(edge_end(e));
    if (const auto* a = std::get_if<CircularArc>(&e)) {
      arcs.push_back(a);
      for (int k = 0; k < kArcDirections; ++k) {
        const double ang = k * kTwoPi / kArcDirections;
        if (a->param_of_angle(ang)) cand.push_back(a->center + polar(a->radius, ang));
      }
    }
  }
  if (cand.empty()) return 0.0;
  FarPair best = farthest_pair(cand);
  for (int round = 0; round < 4 && !arcs.empty(); ++round) {
    bool added = false;
    for (const auto* a : arcs) {
      for (Point2 from : {best.p, best.q}) {
        const Point2 v = a->center - from;
        const double len = norm(v);
        if (len < 1e-300) continue;
        const double ang = std::atan2(v.y, v.x);
        if (a->param_of_angle(ang)) {
          const Point2 far = a->center + polar(a->radius, ang);
          if (dist(far, from) > best.d) {
            cand.push_back(far);
            added = true;
          }
        }
      }
    }
    if (!added) break;
    best = farthest_pair(cand);
  }
  return best.d;
}

double subarc_diameter(const JordanCurve& curve, const Subarc& arc) {
  const auto pieces = subarc_pieces(curve, arc);
  if (pieces.empty()) return 0.0;
  return edges_diameter(pieces);
}

namespace {

// Arclength (mod L) of the midpoint of the forward subarc p -> q.
double forward_midpoint(const JordanCurve& curve, CurvePoint p, CurvePoint q) {
  const double L = curve.length();
  const double len = subarc_length(curve, {p, q, SubarcDirection::forward});
  return std::fmod(curve.arclength(p) + 0.5 * len, L);
}

SubarcChoice choose(const JordanCurve& curve, CurvePoint x, CurvePoint y, double mf, double mb) {
  const Subarc fwd{x, y, SubarcDirection::forward};
  const Subarc bwd{x, y, SubarcDirection::backward};
  SubarcChoice c;
  if (std::abs(mf - mb) <= curve.tolerance()) {
    c.tied = true;
    const bool fwd_first = forward_midpoint(curve, x, y) <= forward_midpoint(curve, y, x);
    c.arc = fwd_first ? fwd : bwd;
    c.measure = fwd_first ? mf : mb;
    c.other_measure = fwd_first ? mb : mf;
    return c;
  }
  const bool fwd_smaller = mf < mb;
  c.arc = fwd_smaller ? fwd : bwd;
  c.measure = fwd_smaller ? mf : mb;
  c.other_measure = fwd_smaller ? mb : mf;
  return c;
}

}  // namespace

SubarcChoice subarc_smaller_diameter(const JordanCurve& curve, CurvePoint x, CurvePoint y) {
  x = curve.canonical(x);
  y = curve.canonical(y);
  const Subarc fwd{x, y, SubarcDirection::forward};
  const double lf = subarc_length(curve, fwd);
  const double lb = curve.length() - lf;
  const double diam = curve.diameter();
  // diam(A) <= len(A) and diam(B) >= diam(curve) - diam(A): a short enough arc wins outright.
  if (lf + curve.tolerance() < 0.5 * diam) {
    const double df = subarc_diameter(curve, fwd);
    return {fwd, false, df, diam - df};
  }
  if (lb + curve.tolerance() < 0.5 * diam) {
    const Subarc bwd = complement(fwd);
    const double db = subarc_diameter(curve, bwd);
    return {bwd, false, db, diam - db};
  }
  const double df = subarc_diameter(curve, fwd);
  const double db = subarc_diameter(curve, complement(fwd));
  return choose(curve, x, y, df, db);
}

SubarcChoice shorter_subarc_by_length(const JordanCurve& curve, CurvePoint x, CurvePoint y) {
  x = curve.canonical(x);
  y = curve.canonical(y);
  const double lf = subarc_length(curve, {x, y, SubarcDirection::forward});
  return choose(curve, x, y, lf, curve.length() - lf);
}

// ---- Point location --------------------------------------------------------

double unsigned_distance(const JordanCurve& curve, Point2 p, CurvePoint* nearest) {
  double best = std::numeric_limits<double>::infinity();
  CurvePoint where;
  const auto& boxes = curve.edge_boxes();
  for (int i = 0; i < curve.size(); ++i) {
    if (boxes[static_cast<size_t>(i)].distance(p) >= best) continue;
    const Closest c = closest_on_edge(p, curve.edge(i));
    if (c.distance < best) {
      best = c.distance;
      where = {i, c.t};
    }
  }
  if (nearest) *nearest = curve.canonical(where);
  return best;
}

namespace {

double principal_angle(Point2 a, Point2 b) { return std::atan2(cross(a, b), dot(a, b)); }

double angle_change(const Edge& e, Point2 p) {
  if (const auto* s = std::get_if<Segment>(&e)) return principal_angle(s->a - p, s->b - p);
  const auto& a = std::get<CircularArc>(e);
  const Point2 va = a.at(0.0) - p;
  const Point2 vb = a.at(1.0) - p;
  if (dist(p, a.center) > a.radius) return principal_angle(va, vb);
  // Inside the disc the direction to the arc turns monotonically with the sweep.
  const double sgn = a.sweep > 0 ? 1.0 : -1.0;
  if (a.full_circle()) return sgn * kTwoPi;
  const double c = cross(va, vb);
  const double d = dot(va, vb);
  double phi = std::atan2(c, d);
  if (std::abs(c) <= 1e-15 * norm(va) * norm(vb) && d < 0) return sgn * kPi;
  if (phi * sgn <= 0) phi += sgn * kTwoPi;
  return phi;
}

}  // namespace

int winding_number(const JordanCurve& curve, Point2 p) {
  double total = 0.0;
  for (const auto& e : curve.edges()) total += angle_change(e, p);
  return static_cast<int>(std::lround(total / kTwoPi));
}

Side contains(const JordanCurve& curve, Point2 p) {
  if (unsigned_distance(curve, p) <= curve.tolerance()) return Side::on_boundary;
  return winding_number(curve, p) != 0 ? Side::inside : Side::outside;
}

}  // namespace lvl
