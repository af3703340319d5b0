#include "lvl/level_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "offset_engine.hpp"

namespace lvl {

std::string to_string(LevelClass c) {
  switch (c) {
    case LevelClass::empty: return "empty";
    case LevelClass::jordan_curve: return "jordan_curve";
    case LevelClass::multiple_components: return "multiple_components";
    case LevelClass::non_manifold: return "non_manifold";
  }
  return "unknown";
}

LevelSetResult level_set_exact(const JordanCurve& curve, double eps, Exec exec) {
  const double tol = curve.tolerance();
  const double d = std::abs(eps);
  if (!(d > tol)) throw std::invalid_argument("level_set_exact: |eps| is below the curve tolerance");
  if (eps >= curve.diameter()) {
    LevelSetResult empty;
    empty.epsilon = eps;
    return empty;
  }
  const auto cands = detail::curve_candidates(curve, d, tol);
  detail::Assembly a;
  auto pieces = detail::split_pieces(cands.prims, nullptr, tol, 4 * tol, exec, &a.vertices);
  auto field = [&](Point2 p) { return signed_distance(curve, p); };
  pieces = detail::trim_pieces(pieces, field, eps, tol, exec);
  a.pieces = detail::dedupe_pieces(pieces, 4 * tol);
  a.vertices.insert(a.vertices.end(), cands.points.begin(), cands.points.end());
  auto tip_ok = [&](Point2 p) {
    const auto n = nearest_points(curve, p);
    return n.continuum || n.points.size() >= 2;
  };
  return detail::assemble(eps, a, field, eps, tol, tip_ok);
}

JordanCurve chain_curve(const Chain& chain) {
  if (!chain.closed) throw std::invalid_argument("chain_curve: chain is open");
  return JordanCurve(chain.edges);
}

JordanCurve level_curve(const LevelSetResult& level) {
  if (level.classification != LevelClass::jordan_curve) {
    throw std::invalid_argument("level_curve: level set is " + to_string(level.classification));
  }
  for (const auto& c : level.chains) {
    if (c.closed) return chain_curve(c);
  }
  throw std::logic_error("level_curve: no closed chain");
}

namespace {

LevelSetResult boundary_of(const std::vector<Edge>& chain, const std::vector<Point2>& points, double eps,
                           double tol) {
  const auto cands = detail::set_candidates(chain, points, eps, tol);
  detail::Assembly a;
  auto pieces = detail::split_pieces(cands.prims, nullptr, tol, 4 * tol, Exec::serial, &a.vertices);
  auto field = [&](Point2 p) { return set_distance(chain, points, p); };
  pieces = detail::trim_pieces(pieces, field, eps, tol, Exec::serial);
  a.pieces = detail::dedupe_pieces(pieces, 4 * tol);
  a.vertices.insert(a.vertices.end(), cands.points.begin(), cands.points.end());
  auto tip_ok = [&](Point2 p) {
    const double d = field(p);
    const double reach = d * (1 + 1e-6) + tol;
    std::vector<Point2> near;
    for (const auto& e : chain) {
      const Closest c = closest_on_edge(p, e);
      if (c.distance <= reach) near.push_back(c.point);
      if (dist(p, edge_start(e)) <= reach) near.push_back(edge_start(e));
      if (dist(p, edge_end(e)) <= reach) near.push_back(edge_end(e));
    }
    for (const auto& q : points) {
      if (dist(p, q) <= reach) near.push_back(q);
    }
    for (size_t i = 0; i < near.size(); ++i) {
      for (size_t j = i + 1; j < near.size(); ++j) {
        if (dist(near[i], near[j]) > 4 * tol) return true;
      }
    }
    return false;
  };
  return detail::assemble(eps, a, field, eps, tol, tip_ok);
}

}  // namespace

LevelSetResult eps_boundary_of_set(const std::vector<Edge>& chain, const std::vector<Point2>& points, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps_boundary_of_set: eps must be positive");
  if (chain.empty() && points.empty()) throw std::invalid_argument("eps_boundary_of_set: empty set");
  const double diam = edges_diameter(chain, points);
  const double tol = Tolerance{}.effective(std::max(diam, eps));
  return boundary_of(chain, points, eps, tol);
}

LevelSetResult eps_boundary_of_subarc(const JordanCurve& curve, const Subarc& arc, double eps) {
  const auto pieces = subarc_pieces(curve, arc);
  if (pieces.empty()) return eps_boundary_of_set({}, {curve.point(arc.start)}, eps);
  return eps_boundary_of_set(pieces, {}, eps);
}

LevelSetResult level_subset_for_subarc(const JordanCurve& curve, const LevelSetResult& level, const Subarc& arc) {
  const double tol = curve.tolerance();
  const double d = std::abs(level.epsilon);
  std::vector<Edge> lambda = subarc_pieces(curve, arc);
  std::vector<Point2> lambda_pts;
  if (lambda.empty()) lambda_pts.push_back(curve.point(arc.start));
  std::vector<Edge> level_edges;
  for (const auto& c : level.chains) level_edges.insert(level_edges.end(), c.edges.begin(), c.edges.end());
  const auto cutters = detail::set_candidates(lambda, lambda_pts, d, tol);
  detail::Assembly a;
  auto pieces = detail::split_pieces(level_edges, &cutters.prims, tol, 4 * tol, Exec::serial, nullptr);
  auto field = [&](Point2 p) { return set_distance(lambda, lambda_pts, p); };
  a.pieces = detail::trim_pieces(pieces, field, d, tol, Exec::serial);
  for (const auto& p : level.isolated_points) a.vertices.push_back(p);
  LevelSetResult res = detail::assemble(level.epsilon, a, field, d, tol, {});
  if (res.classification == LevelClass::non_manifold && res.branch_points.empty()) {
    // Open ends are expected here: a subset of a Jordan curve is an arc.
    const auto g = detail::stitch(a.pieces, 4 * tol);
    res.components = detail::graph_components(g) + static_cast<int>(res.isolated_points.size());
    res.classification = LevelClass::multiple_components;
  }
  return res;
}

EdgeCensus census(const std::vector<Chain>& chains) {
  EdgeCensus c;
  for (const auto& ch : chains) {
    for (const auto& e : ch.edges) {
      if (is_arc(e)) {
        ++c.arcs;
      } else {
        ++c.segments;
      }
    }
  }
  return c;
}

}  // namespace lvl
