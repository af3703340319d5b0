#include "lvl/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace lvl {

namespace {

// cos/sin with values within 1e-15 of 0 or +-1 snapped, so axis-aligned polygons stay exact.
double snap(double v) {
  if (std::abs(v) < 1e-15) return 0.0;
  if (std::abs(v - 1.0) < 1e-15) return 1.0;
  if (std::abs(v + 1.0) < 1e-15) return -1.0;
  return v;
}

}  // namespace

JordanCurve regular_ngon(int n, double side) {
  if (n < 3) throw std::invalid_argument("regular_ngon: need at least 3 sides");
  if (!(side > 0)) throw std::invalid_argument("regular_ngon: side must be positive");
  std::vector<Point2> v;
  v.reserve(static_cast<size_t>(n));
  Point2 p{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    v.push_back(p);
    const double a = kTwoPi * k / n;
    p = p + Point2{snap(std::cos(a)), snap(std::sin(a))} * side;
  }
  return JordanCurve::polygon(v);
}

JordanCurve circle_curve(double r, Point2 center) {
  if (!(r > 0)) throw std::invalid_argument("circle_curve: radius must be positive");
  return JordanCurve({CircularArc{center, r, 0.0, kPi}, CircularArc{center, r, kPi, kPi}});
}

StaircaseTooth staircase_tooth(int n) {
  const double w = std::ldexp(1.0, -n);
  StaircaseTooth t;
  t.right_foot = {w, 0.0};
  t.left_foot = {w - std::ldexp(1.0, -n - 2), 0.0};
  t.height = std::ldexp(1.0, -n - 2) * (0.5 + w);
  return t;
}

JordanCurve staircase_sharpljc(int teeth) {
  if (teeth < 1 || teeth > 20) throw std::invalid_argument("staircase_sharpljc: teeth must be in [1, 20]");
  std::vector<Point2> v{{-1.0, -3.0}, {2.0, -3.0}, {2.0, 0.0}};
  for (int n = 0; n < teeth; ++n) {
    const auto t = staircase_tooth(n);
    v.push_back(t.right_foot);
    v.push_back({t.right_foot.x, t.height});
    v.push_back({t.left_foot.x, t.height});
    v.push_back(t.left_foot);
  }
  v.push_back({-1.0, 0.0});
  return JordanCurve::polygon(v);
}

BumpArc sharplqc_bump(int n) {
  BumpArc b;
  b.radius = std::ldexp(1.0, -2 * n - 4);
  b.alpha = (kPi / 12.0) * std::ldexp(1.0, 1 - n);
  b.center = {std::ldexp(1.0, -n), -b.radius * std::sin(b.alpha)};
  return b;
}

JordanCurve sharplqc_curve(int n, int n_max) {
  if (n < 12) throw std::invalid_argument("sharplqc_curve: polygon needs at least 12 sides");
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("sharplqc_curve: n_max must be in [1, 10]");
  std::vector<Edge> edges;
  // Top edge, right to left: flat pieces on y = 0 between the bumps.
  double x = 1.0;
  for (int k = 1; k <= n_max; ++k) {
    const auto b = sharplqc_bump(k);
    const double right = b.center.x + b.radius * std::cos(b.alpha);
    const double left = b.center.x - b.radius * std::cos(b.alpha);
    if (!(right < x)) {
      throw std::invalid_argument("sharplqc_curve: bump " + std::to_string(k) + " overlaps its neighbour");
    }
    edges.emplace_back(Segment{{x, 0.0}, {right, 0.0}});
    edges.emplace_back(CircularArc{b.center, b.radius, b.alpha, kPi - 2 * b.alpha});
    x = left;
  }
  edges.emplace_back(Segment{{x, 0.0}, {-1.0, 0.0}});
  // Remaining sides of the polygon, turning left by 2pi/n each time.
  Point2 p{-1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double a = kPi + kTwoPi * k / n;
    const Point2 q = k + 1 == n ? Point2{1.0, 0.0} : p + Point2{snap(std::cos(a)), snap(std::sin(a))} * 2.0;
    edges.emplace_back(Segment{p, q});
    p = q;
  }
  // Snap the flat pieces onto the exact arc endpoints.
  for (size_t i = 0; i < edges.size(); ++i) {
    if (auto* a = std::get_if<CircularArc>(&edges[i])) {
      std::get<Segment>(edges[i - 1]).b = a->at(0.0);
      std::get<Segment>(edges[i + 1]).a = a->at(1.0);
    }
  }
  return JordanCurve(std::move(edges));
}

JordanCurve rohde_snowflake(const SnowflakeSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("rohde_snowflake: N must be at least 3");
  if (!(spec.p >= 0.25 && spec.p < 0.5)) throw std::invalid_argument("rohde_snowflake: p must be in [1/4, 1/2)");
  if (spec.depth < 0) throw std::invalid_argument("rohde_snowflake: depth must be non-negative");
  long long count = spec.n;
  for (int d = 0; d < spec.depth; ++d) {
    count *= 4;
    if (count > kSnowflakeEdgeCap) throw std::invalid_argument("rohde_snowflake: edge count exceeds cap");
  }
  const double p = spec.p;
  const double h = std::sqrt(std::max(0.0, p * p - (0.5 - p) * (0.5 - p)));
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution coin(0.5);

  std::vector<Point2> v = regular_ngon(spec.n, 1.0).vertices();
  for (int d = 0; d < spec.depth; ++d) {
    std::vector<Point2> next;
    next.reserve(v.size() * 4);
    for (size_t k = 0; k < v.size(); ++k) {
      const Point2 a = v[k];
      const Point2 b = v[(k + 1) % v.size()];
      bool bump = false;
      switch (spec.rule) {
        case ChoiceRule::all_flat: bump = false; break;
        case ChoiceRule::all_bump: bump = true; break;
        case ChoiceRule::alternating: bump = k % 2 == 0; break;
        case ChoiceRule::seeded: bump = coin(rng); break;
      }
      const Point2 along = b - a;
      const Point2 out = -perp_left(along);  // outward for a counter-clockwise curve
      auto local = [&](double u, double w) { return a + along * u + out * w; };
      next.push_back(a);
      if (bump) {
        next.push_back(local(p, 0.0));
        next.push_back(local(0.5, h));
        next.push_back(local(1.0 - p, 0.0));
      } else {
        next.push_back(local(0.25, 0.0));
        next.push_back(local(0.5, 0.0));
        next.push_back(local(0.75, 0.0));
      }
    }
    v = std::move(next);
  }
  return JordanCurve::polygon(v);
}

JordanCurve dumbbell(double neck_width) {
  if (!(neck_width > 0 && neck_width < 1)) throw std::invalid_argument("dumbbell: neck width must be in (0, 1)");
  const double lo = 0.5 - 0.5 * neck_width;
  const double hi = 0.5 + 0.5 * neck_width;
  const std::vector<Point2> v{{0, 0}, {1, 0}, {1, lo}, {2, lo}, {2, 0}, {3, 0},
                              {3, 1}, {2, 1}, {2, hi}, {1, hi}, {1, 1}, {0, 1}};
  return JordanCurve::polygon(v);
}

ChoiceRule parse_choice_rule(const std::string& name) {
  if (name == "all_flat") return ChoiceRule::all_flat;
  if (name == "all_bump") return ChoiceRule::all_bump;
  if (name == "alternating") return ChoiceRule::alternating;
  if (name == "seeded") return ChoiceRule::seeded;
  throw std::invalid_argument("unknown choice rule: " + name);
}

std::string to_string(ChoiceRule rule) {
  switch (rule) {
    case ChoiceRule::all_flat: return "all_flat";
    case ChoiceRule::all_bump: return "all_bump";
    case ChoiceRule::alternating: return "alternating";
    case ChoiceRule::seeded: return "seeded";
  }
  return "unknown";
}

}  // namespace lvl
