#include "lvl/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "lvl/pair_kernels.hpp"

namespace lvl {

std::string to_string(ConstantKind k) {
  switch (k) {
    case ConstantKind::zeta_pair: return "zeta_pair";
    case ConstantKind::zeta_sup: return "zeta_sup";
    case ConstantKind::zeta_limit: return "zeta_limit";
    case ConstantKind::delta_linear: return "delta_linear";
    case ConstantKind::two_point: return "two_point";
    case ConstantKind::chord_arc: return "chord_arc";
  }
  return "unknown";
}

namespace {

double deviation(const JordanCurve& curve, const Subarc& arc, const Line& line) {
  double m = 0.0;
  for (const auto& e : subarc_pieces(curve, arc)) m = std::max(m, max_dist_to_line(e, line));
  return m;
}

double wrap_s(double s, double L) {
  s = std::fmod(s, L);
  return s < 0 ? s + L : s;
}

using PairObjective = std::function<double(CurvePoint, CurvePoint)>;

// Golden-section maximization of g over [a, b]; returns the best abscissa probed.
double golden_max(const std::function<double(double)>& g, double a, double b, int iters) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double gc = g(c);
  double gd = g(d);
  for (int k = 0; k < iters; ++k) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - r * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + r * (b - a);
      gd = g(d);
    }
  }
  return gc >= gd ? c : d;
}

struct Best {
  double value = -1.0;
  CurvePoint x, y;
  bool refined = false;
};

double local_gap(const SampleNet& net, int i) {
  const int m = net.size();
  const double L = net.length;
  const double s = net.arclength[static_cast<size_t>(i)];
  const double next = i + 1 < m ? net.arclength[static_cast<size_t>(i + 1)] : net.arclength[0] + L;
  const double prev = i > 0 ? net.arclength[static_cast<size_t>(i - 1)] : net.arclength[static_cast<size_t>(m - 1)] - L;
  return std::max(next - s, s - prev);
}

// Exact evaluation of the screened pairs, then coordinate-wise golden refinement around each.
Best refine_hits(const JordanCurve& curve, const SampleNet& net, const std::vector<PairHit>& hits,
                 const PairObjective& f, const Sampler& sampler) {
  Best best;
  const double L = curve.length();
  for (const auto& h : hits) {
    CurvePoint x = net.params[static_cast<size_t>(h.i)];
    CurvePoint y = net.params[static_cast<size_t>(h.j)];
    double v = f(x, y);
    bool improved = false;
    if (sampler.refine_iterations > 0) {
      double sx = net.arclength[static_cast<size_t>(h.i)];
      double sy = net.arclength[static_cast<size_t>(h.j)];
      const double hx = local_gap(net, h.i);
      const double hy = local_gap(net, h.j);
      for (int round = 0; round < sampler.refine_rounds; ++round) {
        auto gx = [&](double s) { return f(curve.at_arclength(wrap_s(s, L)), y); };
        const double nx = golden_max(gx, sx - hx, sx + hx, sampler.refine_iterations);
        const CurvePoint cx = curve.at_arclength(wrap_s(nx, L));
        const double vx = f(cx, y);
        if (vx > v) {
          v = vx;
          x = cx;
          sx = nx;
          improved = true;
        }
        auto gy = [&](double s) { return f(x, curve.at_arclength(wrap_s(s, L))); };
        const double ny = golden_max(gy, sy - hy, sy + hy, sampler.refine_iterations);
        const CurvePoint cy = curve.at_arclength(wrap_s(ny, L));
        const double vy = f(x, cy);
        if (vy > v) {
          v = vy;
          y = cy;
          sy = ny;
          improved = true;
        }
      }
    }
    if (v > best.value) best = {v, x, y, improved};
  }
  return best;
}

NetOptions net_options(const Sampler& s) { return {s.base_points, s.vertex_levels, s.max_points}; }

// Coarser net for the cubic chordal scan.
NetOptions zeta_net_options(const Sampler& s) {
  const int base = std::max(16, s.base_points / 4);
  return {base, s.vertex_levels, std::min(s.max_points, std::max(1024, base))};
}

void check_budget(const Sampler& s) {
  if (s.base_points <= 0 || s.max_points <= 0) throw std::invalid_argument("sampler budget must be positive");
}

ConstantReport zeta_on_net(const JordanCurve& curve, const SampleNet& net, double r0, const Sampler& sampler) {
  const double tol = curve.tolerance();
  const double margin = 1e-6 * curve.diameter() + tol;
  const auto hits = scan_zeta(net, r0, margin, sampler.top_k, sampler.exec);
  auto f = [&](CurvePoint x, CurvePoint y) {
    const double c = dist(curve.point(x), curve.point(y));
    if (c <= 4 * tol || c > r0) return -1.0;
    return zeta_pair(curve, x, y);
  };
  const Best b = refine_hits(curve, net, hits, f, sampler);
  ConstantReport r;
  r.kind = ConstantKind::zeta_sup;
  r.value = std::max(b.value, 0.0);
  r.x = b.x;
  r.y = b.y;
  r.r0 = r0;
  r.samples_used = net.size();
  r.refined = b.refined;
  r.net_spacing = net.spacing;
  return r;
}

}  // namespace

double zeta_pair(const JordanCurve& curve, CurvePoint x, CurvePoint y) {
  const Point2 px = curve.point(x);
  const Point2 py = curve.point(y);
  const double c = dist(px, py);
  if (!(c > 0)) throw std::invalid_argument("zeta_pair: x and y coincide");
  const Line line = Line::through(px, py);
  const SubarcChoice choice = subarc_smaller_diameter(curve, x, y);
  double dev = deviation(curve, choice.arc, line);
  if (choice.tied) dev = std::max(dev, deviation(curve, complement(choice.arc), line));
  return dev / c;
}

double two_point_ratio(const JordanCurve& curve, CurvePoint x, CurvePoint y) {
  const double c = dist(curve.point(x), curve.point(y));
  if (!(c > 0)) throw std::invalid_argument("two_point_ratio: x and y coincide");
  return subarc_smaller_diameter(curve, x, y).measure / c;
}

double chord_arc_ratio(const JordanCurve& curve, CurvePoint x, CurvePoint y) {
  const double c = dist(curve.point(x), curve.point(y));
  if (!(c > 0)) throw std::invalid_argument("chord_arc_ratio: x and y coincide");
  return shorter_subarc_by_length(curve, x, y).measure / c;
}

ConstantReport zeta_sup(const JordanCurve& curve, double r0, const Sampler& sampler) {
  if (!(r0 > 0)) throw std::invalid_argument("zeta_sup: r0 must be positive");
  check_budget(sampler);
  const SampleNet net = build_net(curve, zeta_net_options(sampler));
  return zeta_on_net(curve, net, r0, sampler);
}

std::vector<double> default_zeta_scales(const JordanCurve& curve, int levels) {
  std::vector<double> s;
  for (int k = 1; k <= levels; ++k) s.push_back(std::ldexp(curve.diameter(), -k));
  return s;
}

ConstantReport zeta_limit(const JordanCurve& curve, const std::vector<double>& scales, const Sampler& sampler) {
  check_budget(sampler);
  if (scales.empty()) throw std::invalid_argument("zeta_limit: empty schedule");
  for (size_t k = 1; k < scales.size(); ++k) {
    if (!(scales[k] < scales[k - 1])) throw std::invalid_argument("zeta_limit: scales must decrease");
  }
  const SampleNet net = build_net(curve, zeta_net_options(sampler));
  ConstantReport out;
  out.kind = ConstantKind::zeta_limit;
  out.scales = scales;
  std::vector<ConstantReport> per;
  for (double r0 : scales) per.push_back(zeta_on_net(curve, net, r0, sampler));
  // The supremum over a larger scale includes every smaller one.
  out.sequence.resize(scales.size());
  double running = 0.0;
  for (size_t k = scales.size(); k-- > 0;) {
    running = std::max(running, per[k].value);
    out.sequence[k] = running;
  }
  const auto& last = per.back();
  out.value = out.sequence.back();
  out.x = last.x;
  out.y = last.y;
  out.r0 = scales.back();
  out.samples_used = net.size();
  out.refined = last.refined;
  out.net_spacing = net.spacing;
  return out;
}

namespace {

// Parameter intervals of e lying inside the closed disk B(c, r).
std::vector<Edge> clip_to_disk(const Edge& e, Point2 c, double r) {
  std::vector<double> ts{0.0, 1.0};
  if (const auto* s = std::get_if<Segment>(&e)) {
    const Point2 d = s->b - s->a;
    const Point2 f = s->a - c;
    const double A = dot(d, d);
    const double B = 2 * dot(f, d);
    const double C = dot(f, f) - r * r;
    const double disc = B * B - 4 * A * C;
    if (disc > 0) {
      const double sq = std::sqrt(disc);
      for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
        if (t > 0 && t < 1) ts.push_back(t);
      }
    }
  } else {
    const auto& a = std::get<CircularArc>(e);
    const double dd = dist(a.center, c);
    if (dd > 0 && dd < a.radius + r && dd > std::abs(a.radius - r)) {
      const double x = (dd * dd + a.radius * a.radius - r * r) / (2 * dd);
      const double half = std::acos(std::clamp(x / a.radius, -1.0, 1.0));
      const double base = std::atan2(c.y - a.center.y, c.x - a.center.x);
      for (double ang : {base - half, base + half}) {
        if (auto t = a.param_of_angle(ang)) {
          if (*t > 0 && *t < 1) ts.push_back(*t);
        }
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<Edge> out;
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] - ts[k] <= 1e-15) continue;
    const double tm = 0.5 * (ts[k] + ts[k + 1]);
    if (dist(edge_at(e, tm), c) <= r) out.push_back(edge_sub(e, ts[k], ts[k + 1]));
  }
  return out;
}

}  // namespace

double delta_linear(const JordanCurve& curve, CurvePoint x, double r, double* best_angle) {
  if (!(r > 0)) throw std::invalid_argument("delta_linear: r must be positive");
  const Point2 p = curve.point(x);
  std::vector<Edge> pieces;
  for (int i = 0; i < curve.size(); ++i) {
    if (curve.edge_boxes()[static_cast<size_t>(i)].distance(p) > r) continue;
    for (auto& e : clip_to_disk(curve.edge(i), p, r)) pieces.push_back(std::move(e));
  }
  auto dev = [&](double theta) {
    const Line l{p, {std::cos(theta), std::sin(theta)}};
    double m = 0.0;
    for (const auto& e : pieces) m = std::max(m, max_dist_to_line(e, l));
    return m;
  };
  std::vector<double> cands;
  constexpr int kUniform = 360;
  for (int k = 0; k < kUniform; ++k) cands.push_back(kPi * k / kUniform);
  for (const auto& e : pieces) {
    for (Point2 q : {edge_start(e), edge_end(e)}) {
      if (dist(q, p) > 0) cands.push_back(std::atan2(q.y - p.y, q.x - p.x));
    }
    for (double t : {0.0, 0.5, 1.0}) {
      const Point2 tg = edge_tangent(e, t);
      cands.push_back(std::atan2(tg.y, tg.x));
    }
  }
  for (auto& c : cands) {
    c = std::fmod(c, kPi);
    if (c < 0) c += kPi;
  }
  std::sort(cands.begin(), cands.end());
  std::vector<std::pair<double, double>> scored;
  scored.reserve(cands.size());
  for (double c : cands) scored.emplace_back(dev(c), c);
  std::sort(scored.begin(), scored.end());
  double best = scored.front().first;
  double arg = scored.front().second;
  const double w = kPi / kUniform;
  auto neg = [&](double th) { return -dev(th); };
  for (size_t k = 0; k < std::min<size_t>(3, scored.size()); ++k) {
    const double c = scored[k].second;
    const double th = golden_max(neg, c - w, c + w, 40);
    const double v = dev(th);
    if (v < best) {
      best = v;
      arg = th;
    }
  }
  if (best_angle) *best_angle = arg;
  return best / r;
}

ConstantReport delta_linear_report(const JordanCurve& curve, CurvePoint x, double r) {
  ConstantReport rep;
  rep.kind = ConstantKind::delta_linear;
  rep.value = delta_linear(curve, x, r);
  rep.x = x;
  rep.y = x;
  rep.radius = r;
  rep.refined = true;
  return rep;
}

namespace {

ConstantReport pair_constant(const JordanCurve& curve, const Sampler& sampler, ConstantKind kind) {
  check_budget(sampler);
  const SampleNet net = build_net(curve, net_options(sampler));
  const double tol = curve.tolerance();
  const bool two_point = kind == ConstantKind::two_point;
  const auto hits = two_point ? scan_two_point(net, sampler.top_k, sampler.exec)
                              : scan_chord_arc(net, sampler.top_k, sampler.exec);
  auto f = [&](CurvePoint x, CurvePoint y) {
    const double c = dist(curve.point(x), curve.point(y));
    if (c <= 4 * tol) return -1.0;
    return two_point ? two_point_ratio(curve, x, y) : chord_arc_ratio(curve, x, y);
  };
  const Best b = refine_hits(curve, net, hits, f, sampler);
  ConstantReport r;
  r.kind = kind;
  r.value = std::max(b.value, 0.0);
  r.x = b.x;
  r.y = b.y;
  r.samples_used = net.size();
  r.refined = b.refined;
  r.net_spacing = net.spacing;
  return r;
}

}  // namespace

ConstantReport two_point_constant(const JordanCurve& curve, const Sampler& sampler) {
  return pair_constant(curve, sampler, ConstantKind::two_point);
}

ConstantReport chord_arc_constant(const JordanCurve& curve, const Sampler& sampler) {
  return pair_constant(curve, sampler, ConstantKind::chord_arc);
}

ChordalCheck check_chordal(const JordanCurve& curve, double zeta, double r0, const Sampler& sampler) {
  if (!(zeta > 0) || !(r0 > 0)) throw std::invalid_argument("check_chordal: zeta and r0 must be positive");
  ChordalCheck c;
  c.report = zeta_sup(curve, r0, sampler);
  c.ok = c.report.value <= zeta + 1e-9;
  return c;
}

double largest_chordal_scale(const JordanCurve& curve, double zeta, const Sampler& sampler, int max_halvings) {
  check_budget(sampler);
  const SampleNet net = build_net(curve, zeta_net_options(sampler));
  for (int k = 0; k <= max_halvings; ++k) {
    const double r0 = std::ldexp(curve.diameter(), -k);
    if (zeta_on_net(curve, net, r0, sampler).value <= zeta + 1e-9) return r0;
  }
  return 0.0;
}

double two_point_bound(double zeta, double diameter, double r0) {
  return std::max(4 * zeta * zeta + 2 * zeta + 1, diameter / r0);
}

}  // namespace lvl
