#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "lvl/level_set.hpp"

namespace lvl {

namespace {

// Uniform bucket grid over edge boxes for nearest-edge queries.
class EdgeIndex {
 public:
  EdgeIndex(const std::vector<Edge>& edges, double cell) : edges_(edges), cell_(cell) {
    if (edges_.empty()) return;
    box_ = edge_box(edges_[0]);
    for (const auto& e : edges_) {
      const Box b = edge_box(e);
      box_.expand({b.xmin, b.ymin});
      box_.expand({b.xmax, b.ymax});
    }
    nx_ = std::max(1, static_cast<int>(std::ceil((box_.xmax - box_.xmin) / cell_)) + 1);
    ny_ = std::max(1, static_cast<int>(std::ceil((box_.ymax - box_.ymin) / cell_)) + 1);
    // Keep the bucket table bounded for sparse inputs.
    while (static_cast<double>(nx_) * ny_ > 4e6) {
      cell_ *= 2;
      nx_ = std::max(1, static_cast<int>(std::ceil((box_.xmax - box_.xmin) / cell_)) + 1);
      ny_ = std::max(1, static_cast<int>(std::ceil((box_.ymax - box_.ymin) / cell_)) + 1);
    }
    buckets_.resize(static_cast<size_t>(nx_) * static_cast<size_t>(ny_));
    for (size_t k = 0; k < edges_.size(); ++k) {
      const Box b = edge_box(edges_[k]);
      const int i0 = cx(b.xmin), i1 = cx(b.xmax), j0 = cy(b.ymin), j1 = cy(b.ymax);
      for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) buckets_[index(i, j)].push_back(static_cast<int>(k));
      }
    }
  }

  [[nodiscard]] double nearest(Point2 p) const {
    double best = std::numeric_limits<double>::infinity();
    if (edges_.empty()) return best;
    const int pi = std::clamp(cx(p.x), 0, nx_ - 1);
    const int pj = std::clamp(cy(p.y), 0, ny_ - 1);
    const int max_ring = std::max(nx_, ny_);
    for (int r = 0; r <= max_ring; ++r) {
      for (int j = pj - r; j <= pj + r; ++j) {
        if (j < 0 || j >= ny_) continue;
        const bool edge_row = j == pj - r || j == pj + r;
        for (int i = pi - r; i <= pi + r; i += edge_row ? 1 : 2 * r) {
          if (i >= 0 && i < nx_) {
            for (int k : buckets_[index(i, j)]) best = std::min(best, dist_point_primitive(p, edges_[static_cast<size_t>(k)]));
          }
          if (r == 0) break;
        }
      }
      if (best <= r * cell_) break;
    }
    return best;
  }

 private:
  [[nodiscard]] int cx(double x) const { return std::clamp(static_cast<int>(std::floor((x - box_.xmin) / cell_)), 0, nx_ - 1); }
  [[nodiscard]] int cy(double y) const { return std::clamp(static_cast<int>(std::floor((y - box_.ymin) / cell_)), 0, ny_ - 1); }
  [[nodiscard]] size_t index(int i, int j) const { return static_cast<size_t>(j) * static_cast<size_t>(nx_) + static_cast<size_t>(i); }

  const std::vector<Edge>& edges_;
  double cell_;
  Box box_;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<int>> buckets_;
};

std::vector<Point2> sample_edge(const Edge& e, double step) {
  const int n = std::max(2, static_cast<int>(std::ceil(edge_length(e) / step)));
  std::vector<Point2> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(edge_at(e, static_cast<double>(k) / n));
  return out;
}

}  // namespace

std::vector<Polyline> marching_squares(const ScalarGrid& g, double iso,
                                       const std::function<double(Point2)>& center_value) {
  const long long nx = g.nx;
  auto hkey = [&](long long i, long long j) { return 2 * (j * nx + i); };
  auto vkey = [&](long long i, long long j) { return 2 * (j * nx + i) + 1; };
  auto above = [&](int i, int j) { return g.at(i, j) > iso; };
  auto crossing = [&](long long key) {
    const long long node = key / 2;
    const int i = static_cast<int>(node % nx);
    const int j = static_cast<int>(node / nx);
    const int i2 = (key % 2 == 0) ? i + 1 : i;
    const int j2 = (key % 2 == 0) ? j : j + 1;
    const double a = g.at(i, j);
    const double b = g.at(i2, j2);
    const double t = (iso - a) / (b - a);
    const Point2 p = g.node(i, j);
    const Point2 q = g.node(i2, j2);
    return p + (q - p) * t;
  };
  std::vector<std::array<long long, 2>> segs;
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const int idx = (above(i, j) ? 1 : 0) | (above(i + 1, j) ? 2 : 0) | (above(i + 1, j + 1) ? 4 : 0) |
                      (above(i, j + 1) ? 8 : 0);
      if (idx == 0 || idx == 15) continue;
      const long long e[4] = {hkey(i, j), vkey(i + 1, j), hkey(i, j + 1), vkey(i, j)};
      if (idx == 5 || idx == 10) {
        const Point2 c = g.node(i, j) + Point2{0.5 * g.h, 0.5 * g.h};
        const bool center_above = center_value(c) > iso;
        // Cut off the two corners whose state differs from the centre.
        const bool cut_13 = (idx == 5) == center_above;
        if (cut_13) {
          segs.push_back({e[0], e[1]});
          segs.push_back({e[2], e[3]});
        } else {
          segs.push_back({e[3], e[0]});
          segs.push_back({e[1], e[2]});
        }
        continue;
      }
      const bool corner[4] = {(idx & 1) != 0, (idx & 2) != 0, (idx & 4) != 0, (idx & 8) != 0};
      std::vector<long long> cut;
      for (int k = 0; k < 4; ++k) {
        if (corner[k] != corner[(k + 1) % 4]) cut.push_back(e[k]);
      }
      segs.push_back({cut[0], cut[1]});
    }
  }
  std::unordered_map<long long, std::vector<int>> at_key;
  for (size_t s = 0; s < segs.size(); ++s) {
    at_key[segs[s][0]].push_back(static_cast<int>(s));
    at_key[segs[s][1]].push_back(static_cast<int>(s));
  }
  std::vector<char> used(segs.size(), 0);
  std::vector<Polyline> out;
  auto walk = [&](int s0, long long from) {
    Polyline pl;
    pl.points.push_back(crossing(from));
    long long key = from;
    int s = s0;
    while (s >= 0 && !used[static_cast<size_t>(s)]) {
      used[static_cast<size_t>(s)] = 1;
      key = segs[static_cast<size_t>(s)][0] == key ? segs[static_cast<size_t>(s)][1] : segs[static_cast<size_t>(s)][0];
      pl.points.push_back(crossing(key));
      s = -1;
      for (int t : at_key[key]) {
        if (!used[static_cast<size_t>(t)]) s = t;
      }
    }
    pl.closed = key == from && pl.points.size() > 2;
    if (pl.closed) pl.points.pop_back();
    return pl;
  };
  // Open contours start at keys with a single segment (grid border).
  std::vector<long long> keys;
  keys.reserve(at_key.size());
  for (const auto& [k, v] : at_key) {
    if (v.size() == 1) keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end());
  for (long long k : keys) {
    const int s = at_key[k][0];
    if (!used[static_cast<size_t>(s)]) out.push_back(walk(s, k));
  }
  for (size_t s = 0; s < segs.size(); ++s) {
    if (!used[s]) out.push_back(walk(static_cast<int>(s), segs[s][0]));
  }
  return out;
}

Box level_box(const JordanCurve& curve, double eps, double h) {
  Box b = curve.bbox();
  const double m = (eps < 0 ? -eps : 0.0) + 3 * h;
  b.xmin -= m;
  b.ymin -= m;
  b.xmax += m;
  b.ymax += m;
  return b;
}

std::vector<Polyline> level_set_grid(const JordanCurve& curve, double eps, double h, std::size_t cap, Exec exec) {
  if (!(h > 0)) throw std::invalid_argument("level_set_grid: h must be positive");
  const ScalarGrid g = grid_sample(curve, level_box(curve, eps, h), h, cap, exec);
  return marching_squares(g, eps, [&](Point2 p) { return signed_distance(curve, p); });
}

double hausdorff_distance(const std::vector<Chain>& exact, const std::vector<Polyline>& approx, double step) {
  std::vector<Edge> exact_edges;
  for (const auto& c : exact) exact_edges.insert(exact_edges.end(), c.edges.begin(), c.edges.end());
  std::vector<Edge> poly_edges;
  for (const auto& pl : approx) {
    const size_t n = pl.points.size();
    for (size_t k = 0; k + 1 < n; ++k) poly_edges.emplace_back(Segment{pl.points[k], pl.points[k + 1]});
    if (pl.closed && n > 2) poly_edges.emplace_back(Segment{pl.points[n - 1], pl.points[0]});
  }
  if (exact_edges.empty() && poly_edges.empty()) return 0.0;
  if (exact_edges.empty() || poly_edges.empty()) return std::numeric_limits<double>::infinity();
  const EdgeIndex to_poly(poly_edges, 4 * step);
  const EdgeIndex to_exact(exact_edges, 4 * step);
  double h = 0.0;
  for (const auto& e : exact_edges) {
    for (const auto& p : sample_edge(e, step)) h = std::max(h, to_poly.nearest(p));
  }
  for (const auto& e : poly_edges) {
    for (const auto& p : sample_edge(e, step)) h = std::max(h, to_exact.nearest(p));
  }
  return h;
}

ComponentLabels label_components(const JordanCurve& curve, double eps, double h, std::size_t cap) {
  ComponentLabels out;
  out.grid = grid_sample(curve, level_box(curve, eps, h), h, cap);
  const auto& g = out.grid;
  const size_t n = g.values.size();
  out.label.assign(n, -1);
  auto beyond = [&](size_t k) { return eps > 0 ? g.values[k] > eps : g.values[k] < eps; };
  std::deque<size_t> queue;
  for (size_t start = 0; start < n; ++start) {
    if (out.label[start] >= 0 || !beyond(start)) continue;
    const int id = out.count++;
    out.label[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      const size_t k = queue.front();
      queue.pop_front();
      const int i = static_cast<int>(k % static_cast<size_t>(g.nx));
      const int j = static_cast<int>(k / static_cast<size_t>(g.nx));
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int m = 0; m < 4; ++m) {
        const int a = i + di[m];
        const int b = j + dj[m];
        if (a < 0 || b < 0 || a >= g.nx || b >= g.ny) continue;
        const size_t q = static_cast<size_t>(b) * static_cast<size_t>(g.nx) + static_cast<size_t>(a);
        if (out.label[q] >= 0 || !beyond(q)) continue;
        out.label[q] = id;
        queue.push_back(q);
      }
    }
  }
  return out;
}

bool connected_in_disk(const ComponentLabels& labels, Point2 x, Point2 y, double radius) {
  const auto& g = labels.grid;
  auto node_of = [&](Point2 p) {
    const int i = std::clamp(static_cast<int>(std::lround((p.x - g.origin.x) / g.h)), 0, g.nx - 1);
    const int j = std::clamp(static_cast<int>(std::lround((p.y - g.origin.y) / g.h)), 0, g.ny - 1);
    return static_cast<size_t>(j) * static_cast<size_t>(g.nx) + static_cast<size_t>(i);
  };
  const size_t a = node_of(x);
  const size_t b = node_of(y);
  const int id = labels.label[a];
  if (id < 0 || labels.label[b] != id) return false;
  std::vector<char> seen(g.values.size(), 0);
  std::deque<size_t> queue{a};
  seen[a] = 1;
  while (!queue.empty()) {
    const size_t k = queue.front();
    queue.pop_front();
    if (k == b) return true;
    const int i = static_cast<int>(k % static_cast<size_t>(g.nx));
    const int j = static_cast<int>(k / static_cast<size_t>(g.nx));
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int m = 0; m < 4; ++m) {
      const int u = i + di[m];
      const int v = j + dj[m];
      if (u < 0 || v < 0 || u >= g.nx || v >= g.ny) continue;
      const size_t q = static_cast<size_t>(v) * static_cast<size_t>(g.nx) + static_cast<size_t>(u);
      if (seen[q] || labels.label[q] != id || dist(g.node(u, v), x) > radius) continue;
      seen[q] = 1;
      queue.push_back(q);
    }
  }
  return false;
}

DeltaComponents classify_components(const JordanCurve& curve, double eps, double h, std::size_t cap) {
  if (eps == 0.0) throw std::invalid_argument("classify_components: eps must be nonzero");
  DeltaComponents out;
  out.epsilon = eps;
  if (!(h > 0)) h = std::min(std::abs(eps) / 8, curve.diameter() / 64);
  auto fits = [&](double hh) {
    const auto [nx, ny] = grid_dims(level_box(curve, eps, hh), hh);
    return static_cast<double>(nx) * ny <= static_cast<double>(cap);
  };
  while (!fits(h)) h *= 1.25;

  int expected = -1;
  const auto exact = level_set_exact(curve, eps);
  if (exact.classification != LevelClass::non_manifold) {
    expected = 0;
    for (const auto& c : exact.chains) expected += c.closed ? 1 : 0;
  }
  for (int round = 0; round < 4; ++round) {
    const auto labels = label_components(curve, eps, h, cap);
    out.count = labels.count;
    out.h = h;
    out.representatives.assign(static_cast<size_t>(labels.count), Point2{});
    std::vector<char> have(static_cast<size_t>(labels.count), 0);
    for (size_t k = 0; k < labels.label.size(); ++k) {
      const int id = labels.label[k];
      if (id < 0 || have[static_cast<size_t>(id)]) continue;
      have[static_cast<size_t>(id)] = 1;
      const int i = static_cast<int>(k % static_cast<size_t>(labels.grid.nx));
      const int j = static_cast<int>(k / static_cast<size_t>(labels.grid.nx));
      out.representatives[static_cast<size_t>(id)] = labels.grid.node(i, j);
    }
    out.validated = expected >= 0 && expected == out.count;
    if (expected < 0 || out.validated || !fits(h / 2)) break;
    h /= 2;
  }
  return out;
}

}  // namespace lvl
