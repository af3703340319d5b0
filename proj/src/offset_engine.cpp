#include "offset_engine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace lvl::detail {

namespace {

// Arc of S(v, d) over the directions u with u.t_in >= 0 and u.t_out <= 0, i.e. where v satisfies the
// first-order condition for being the nearest point of both incident edges.
std::optional<CircularArc> wedge_arc(Point2 v, Point2 t_in, Point2 t_out, double d, double tol) {
  const Point2 s = t_in - t_out;
  if (norm(s) <= 1e-12) return std::nullopt;
  const double delta = std::acos(std::clamp(-dot(t_in, t_out), -1.0, 1.0));
  const double w = kPi - delta;
  if (w * d <= 4 * tol) return std::nullopt;
  const double mid = std::atan2(s.y, s.x);
  return CircularArc{v, d, mid - 0.5 * w, w};
}

void add_edge_offsets(const Edge& e, double d, double tol, Candidates& out) {
  if (const auto* s = std::get_if<Segment>(&e)) {
    const Point2 n = perp_left(s->direction()) * d;
    out.prims.emplace_back(Segment{s->a + n, s->b + n});
    out.prims.emplace_back(Segment{s->a - n, s->b - n});
    return;
  }
  const auto& a = std::get<CircularArc>(e);
  out.prims.emplace_back(CircularArc{a.center, a.radius + d, a.start_angle, a.sweep});
  const double inner = a.radius - d;
  if (inner > tol) {
    out.prims.emplace_back(CircularArc{a.center, inner, a.start_angle, a.sweep});
  } else if (inner >= -tol) {
    out.points.push_back(a.center);
  }
}

double piece_signed_area(const std::vector<Edge>& edges) {
  double twice = 0.0;
  for (const auto& e : edges) {
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

std::optional<Edge> merge_edges(const Edge& e1, const Edge& e2, double tol) {
  const auto* s1 = std::get_if<Segment>(&e1);
  const auto* s2 = std::get_if<Segment>(&e2);
  if (s1 && s2) {
    const Point2 u = s1->b - s1->a;
    const Point2 w = s2->b - s2->a;
    if (dot(u, w) <= 0) return std::nullopt;
    const Segment joined{s1->a, s2->b};
    if (dist_point_primitive(s1->b, Line::through(joined.a, joined.b)) > tol) return std::nullopt;
    return Edge{joined};
  }
  const auto* a1 = std::get_if<CircularArc>(&e1);
  const auto* a2 = std::get_if<CircularArc>(&e2);
  if (a1 && a2) {
    if (dist(a1->center, a2->center) > tol || std::abs(a1->radius - a2->radius) > tol) return std::nullopt;
    if ((a1->sweep > 0) != (a2->sweep > 0)) return std::nullopt;
    const double sweep = a1->sweep + a2->sweep;
    if (std::abs(sweep) > kTwoPi + 1e-12) return std::nullopt;
    return Edge{CircularArc{a1->center, a1->radius, a1->start_angle, std::clamp(sweep, -kTwoPi, kTwoPi)}};
  }
  return std::nullopt;
}

void merge_chain(Chain& chain, double tol) {
  auto& es = chain.edges;
  std::vector<Edge> out;
  for (const auto& e : es) {
    if (!out.empty()) {
      if (auto m = merge_edges(out.back(), e, tol)) {
        out.back() = *m;
        continue;
      }
    }
    out.push_back(e);
  }
  if (chain.closed) {
    while (out.size() > 1) {
      auto m = merge_edges(out.back(), out.front(), tol);
      if (!m) break;
      out.front() = *m;
      out.pop_back();
    }
  }
  es = std::move(out);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Clusters points lying within `radius` of each other (transitively). Returns cluster id per point.
std::vector<int> cluster_points(const std::vector<Point2>& pts, double radius, int* count) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[static_cast<size_t>(a)].x < pts[static_cast<size_t>(b)].x; });
  UnionFind uf(pts.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const Point2 p = pts[static_cast<size_t>(order[i])];
    for (size_t j = i + 1; j < order.size(); ++j) {
      const Point2 q = pts[static_cast<size_t>(order[j])];
      if (q.x - p.x > radius) break;
      if (dist(p, q) <= radius) uf.unite(order[i], order[j]);
    }
  }
  std::vector<int> id(pts.size(), -1);
  std::vector<int> root_id(pts.size(), -1);
  int n = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const int r = uf.find(static_cast<int>(i));
    if (root_id[static_cast<size_t>(r)] < 0) root_id[static_cast<size_t>(r)] = n++;
    id[i] = root_id[static_cast<size_t>(r)];
  }
  if (count) *count = n;
  return id;
}

}  // namespace

Candidates curve_candidates(const JordanCurve& curve, double d, double tol) {
  Candidates out;
  for (int i = 0; i < curve.size(); ++i) add_edge_offsets(curve.edge(i), d, tol, out);
  for (int i = 0; i < curve.size(); ++i) {
    const Point2 t_in = edge_tangent(curve.edge(i - 1), 1.0);
    const Point2 t_out = edge_tangent(curve.edge(i), 0.0);
    if (auto w = wedge_arc(edge_start(curve.edge(i)), t_in, t_out, d, tol)) out.prims.emplace_back(*w);
  }
  return out;
}

Candidates set_candidates(const std::vector<Edge>& chain, const std::vector<Point2>& points, double d, double tol) {
  Candidates out;
  for (const auto& e : chain) add_edge_offsets(e, d, tol, out);
  for (size_t i = 1; i < chain.size(); ++i) {
    const Point2 t_in = edge_tangent(chain[i - 1], 1.0);
    const Point2 t_out = edge_tangent(chain[i], 0.0);
    if (auto w = wedge_arc(edge_start(chain[i]), t_in, t_out, d, tol)) out.prims.emplace_back(*w);
  }
  if (!chain.empty()) {
    const Point2 t0 = edge_tangent(chain.front(), 0.0);
    const Point2 t1 = edge_tangent(chain.back(), 1.0);
    const double back = std::atan2(-t0.y, -t0.x);
    const double fwd = std::atan2(t1.y, t1.x);
    out.prims.emplace_back(CircularArc{edge_start(chain.front()), d, back - 0.5 * kPi, kPi});
    out.prims.emplace_back(CircularArc{edge_end(chain.back()), d, fwd - 0.5 * kPi, kPi});
  }
  for (const auto& p : points) {
    out.prims.emplace_back(CircularArc{p, d, 0.0, kPi});
    out.prims.emplace_back(CircularArc{p, d, kPi, kPi});
  }
  return out;
}

std::vector<Edge> split_pieces(const std::vector<Edge>& prims, const std::vector<Edge>* cutters, double tol,
                               double min_len, Exec exec, std::vector<Point2>* vertices) {
  const size_t np = prims.size();
  std::vector<Box> boxes;
  boxes.reserve(np + (cutters ? cutters->size() : 0));
  for (const auto& e : prims) boxes.push_back(edge_box(e));
  if (cutters) {
    for (const auto& e : *cutters) boxes.push_back(edge_box(e));
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : box_overlap_pairs(boxes, tol)) {
    const bool i_prim = static_cast<size_t>(i) < np;
    const bool j_prim = static_cast<size_t>(j) < np;
    if (cutters ? (i_prim != j_prim) : true) pairs.emplace_back(i, j);
  }
  auto edge_of = [&](int k) -> const Edge& {
    return static_cast<size_t>(k) < np ? prims[static_cast<size_t>(k)] : (*cutters)[static_cast<size_t>(k) - np];
  };
  std::vector<IntersectionResult> results(pairs.size());
  const long long npairs = static_cast<long long>(pairs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long k = 0; k < npairs; ++k) {
      const auto [i, j] = pairs[static_cast<size_t>(k)];
      results[static_cast<size_t>(k)] = intersect(edge_of(i), edge_of(j), tol);
    }
  } else {
    for (long long k = 0; k < npairs; ++k) {
      const auto [i, j] = pairs[static_cast<size_t>(k)];
      results[static_cast<size_t>(k)] = intersect(edge_of(i), edge_of(j), tol);
    }
  }
  std::vector<std::vector<double>> params(np);
  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const auto& r = results[k];
    const bool i_prim = static_cast<size_t>(i) < np;
    const bool j_prim = static_cast<size_t>(j) < np;
    for (const auto& p : r.points) {
      if (i_prim) params[static_cast<size_t>(i)].push_back(p.t1);
      if (j_prim) params[static_cast<size_t>(j)].push_back(p.t2);
      if (vertices) vertices->push_back(p.point);
    }
    for (const auto& o : r.overlaps) {
      if (i_prim) {
        params[static_cast<size_t>(i)].push_back(o.t1_begin);
        params[static_cast<size_t>(i)].push_back(o.t1_end);
      }
      if (j_prim) {
        params[static_cast<size_t>(j)].push_back(o.t2_begin);
        params[static_cast<size_t>(j)].push_back(o.t2_end);
      }
      if (vertices) {
        vertices->push_back(edge_at(edge_of(i), o.t1_begin));
        vertices->push_back(edge_at(edge_of(i), o.t1_end));
      }
    }
  }
  std::vector<Edge> pieces;
  for (size_t i = 0; i < np; ++i) {
    auto& ts = params[i];
    ts.push_back(0.0);
    ts.push_back(1.0);
    for (auto& t : ts) t = std::clamp(t, 0.0, 1.0);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const double len = edge_length(prims[i]);
    double start = 0.0;
    for (size_t k = 1; k < ts.size(); ++k) {
      if ((ts[k] - start) * len <= min_len && k + 1 < ts.size()) continue;
      if ((ts[k] - start) * len > min_len) pieces.push_back(edge_sub(prims[i], start, ts[k]));
      start = ts[k];
    }
  }
  return pieces;
}

std::vector<Edge> trim_pieces(const std::vector<Edge>& pieces, const std::function<double(Point2)>& field,
                              double target, double tol, Exec exec) {
  std::vector<char> keep(pieces.size(), 0);
  auto test = [&](const Edge& e) {
    if (std::abs(field(edge_at(e, 0.5)) - target) > tol) return false;
    if (std::abs(field(edge_start(e)) - target) > tol) return false;
    return std::abs(field(edge_end(e)) - target) <= tol;
  };
  const long long n = static_cast<long long>(pieces.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (long long k = 0; k < n; ++k) keep[static_cast<size_t>(k)] = test(pieces[static_cast<size_t>(k)]) ? 1 : 0;
  } else {
    for (long long k = 0; k < n; ++k) keep[static_cast<size_t>(k)] = test(pieces[static_cast<size_t>(k)]) ? 1 : 0;
  }
  std::vector<Edge> out;
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (keep[k]) out.push_back(pieces[k]);
  }
  return out;
}

std::vector<Edge> dedupe_pieces(const std::vector<Edge>& pieces, double radius) {
  const size_t n = pieces.size();
  std::vector<Point2> mid(n), a(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    mid[i] = edge_at(pieces[i], 0.5);
    a[i] = edge_start(pieces[i]);
    b[i] = edge_end(pieces[i]);
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return mid[i].x < mid[j].x; });
  std::vector<char> drop(n, 0);
  for (size_t oi = 0; oi < n; ++oi) {
    const size_t i = order[oi];
    if (drop[i]) continue;
    for (size_t oj = oi + 1; oj < n; ++oj) {
      const size_t j = order[oj];
      if (mid[j].x - mid[i].x > radius) break;
      if (drop[j] || dist(mid[i], mid[j]) > radius) continue;
      const bool same = dist(a[i], a[j]) <= radius && dist(b[i], b[j]) <= radius;
      const bool flipped = dist(a[i], b[j]) <= radius && dist(b[i], a[j]) <= radius;
      if (same || flipped) drop[std::max(i, j)] = 1;
      if (drop[i]) break;
    }
  }
  std::vector<Edge> out;
  for (size_t i = 0; i < n; ++i) {
    if (!drop[i]) out.push_back(pieces[i]);
  }
  return out;
}

Graph stitch(const std::vector<Edge>& pieces, double radius) {
  std::vector<Point2> ends;
  ends.reserve(2 * pieces.size());
  for (const auto& e : pieces) {
    ends.push_back(edge_start(e));
    ends.push_back(edge_end(e));
  }
  int count = 0;
  const auto id = cluster_points(ends, radius, &count);
  Graph g;
  g.nodes.assign(static_cast<size_t>(count), Point2{});
  std::vector<int> members(static_cast<size_t>(count), 0);
  for (size_t k = 0; k < ends.size(); ++k) {
    g.nodes[static_cast<size_t>(id[k])] = g.nodes[static_cast<size_t>(id[k])] + ends[k];
    ++members[static_cast<size_t>(id[k])];
  }
  for (size_t c = 0; c < g.nodes.size(); ++c) g.nodes[c] = g.nodes[c] / members[c];
  g.degree.assign(static_cast<size_t>(count), 0);
  for (size_t k = 0; k < pieces.size(); ++k) {
    const std::array<int, 2> e{id[2 * k], id[2 * k + 1]};
    g.ends.push_back(e);
    ++g.degree[static_cast<size_t>(e[0])];
    ++g.degree[static_cast<size_t>(e[1])];
  }
  return g;
}

int graph_components(const Graph& g) {
  UnionFind uf(g.nodes.size());
  for (const auto& e : g.ends) uf.unite(e[0], e[1]);
  int n = 0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i) && g.degree[i] > 0) ++n;
  }
  return n;
}

std::vector<Chain> extract_chains(const Graph& g, const std::vector<Edge>& pieces, double tol) {
  std::vector<std::vector<int>> incident(g.nodes.size());
  for (size_t k = 0; k < g.ends.size(); ++k) {
    incident[static_cast<size_t>(g.ends[k][0])].push_back(static_cast<int>(k));
    if (g.ends[k][1] != g.ends[k][0]) incident[static_cast<size_t>(g.ends[k][1])].push_back(static_cast<int>(k));
  }
  std::vector<char> used(pieces.size(), 0);
  auto oriented = [&](int k, int from) {
    Edge e = pieces[static_cast<size_t>(k)];
    const auto [u, v] = g.ends[static_cast<size_t>(k)];
    const bool forward = u == from;
    if (!forward) e = edge_reversed(e);
    const int a = forward ? u : v;
    const int b = forward ? v : u;
    if (auto* s = std::get_if<Segment>(&e)) {
      s->a = g.nodes[static_cast<size_t>(a)];
      s->b = g.nodes[static_cast<size_t>(b)];
    }
    return std::pair<Edge, int>{e, b};
  };
  auto walk = [&](int start_node, int first_piece) {
    Chain c;
    int node = start_node;
    int piece = first_piece;
    while (piece >= 0) {
      used[static_cast<size_t>(piece)] = 1;
      auto [e, next] = oriented(piece, node);
      c.edges.push_back(e);
      node = next;
      piece = -1;
      if (g.degree[static_cast<size_t>(node)] != 2) break;
      for (int k : incident[static_cast<size_t>(node)]) {
        if (!used[static_cast<size_t>(k)]) {
          piece = k;
          break;
        }
      }
    }
    c.closed = node == start_node && g.degree[static_cast<size_t>(node)] == 2;
    return c;
  };
  std::vector<Chain> chains;
  for (size_t n = 0; n < g.nodes.size(); ++n) {
    if (g.degree[n] == 2) continue;
    for (int k : incident[n]) {
      if (!used[static_cast<size_t>(k)]) chains.push_back(walk(static_cast<int>(n), k));
    }
  }
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (!used[k]) chains.push_back(walk(g.ends[k][0], static_cast<int>(k)));
  }
  for (auto& c : chains) merge_chain(c, tol);
  return chains;
}

LevelSetResult assemble(double eps, const Assembly& a, const std::function<double(Point2)>& field, double target,
                        double tol, const std::function<bool(Point2)>& tip_ok) {
  LevelSetResult res;
  res.epsilon = eps;
  const double radius = 4 * tol;
  const Graph g = stitch(a.pieces, radius);
  bool open_end = false;
  for (size_t n = 0; n < g.nodes.size(); ++n) {
    if (g.degree[n] >= 3) res.branch_points.push_back(g.nodes[n]);
    if (g.degree[n] == 1) {
      open_end = true;
      if (tip_ok) {
        if (!tip_ok(g.nodes[n])) {
          throw StitchError("level set has an uncertified open end", g.nodes[n]);
        }
        res.ridge_tips.push_back(g.nodes[n]);
      }
    }
  }
  res.chains = extract_chains(g, a.pieces, tol);

  // Isolated points: level points not covered by any piece.
  std::vector<Point2> lone;
  std::vector<Box> piece_boxes;
  piece_boxes.reserve(a.pieces.size());
  for (const auto& e : a.pieces) piece_boxes.push_back(edge_box(e));
  for (const auto& v : a.vertices) {
    if (std::abs(field(v) - target) > tol) continue;
    bool covered = false;
    for (size_t k = 0; k < a.pieces.size() && !covered; ++k) {
      if (piece_boxes[k].distance(v) > 2 * radius) continue;
      covered = dist_point_primitive(v, a.pieces[k]) <= 2 * radius;
    }
    if (!covered) lone.push_back(v);
  }
  int nlone = 0;
  const auto ids = cluster_points(lone, radius, &nlone);
  std::vector<char> seen(static_cast<size_t>(nlone), 0);
  for (size_t i = 0; i < lone.size(); ++i) {
    if (!seen[static_cast<size_t>(ids[i])]) {
      seen[static_cast<size_t>(ids[i])] = 1;
      res.isolated_points.push_back(lone[i]);
    }
  }

  int closed = 0;
  for (auto& c : res.chains) {
    if (!c.closed) continue;
    ++closed;
    if (piece_signed_area(c.edges) < 0) {
      std::reverse(c.edges.begin(), c.edges.end());
      for (auto& e : c.edges) e = edge_reversed(e);
    }
  }
  const int isolated = static_cast<int>(res.isolated_points.size());
  if (!res.branch_points.empty() || open_end) {
    res.classification = LevelClass::non_manifold;
    res.components = graph_components(g) + isolated;
  } else {
    res.components = closed + isolated;
    if (res.components == 0) {
      res.classification = LevelClass::empty;
    } else if (closed == 1 && isolated == 0) {
      res.classification = LevelClass::jordan_curve;
    } else {
      res.classification = LevelClass::multiple_components;
    }
  }
  return res;
}

}  // namespace lvl::detail
