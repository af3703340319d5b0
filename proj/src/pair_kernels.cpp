#include "lvl/pair_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lvl {

namespace {

bool better(const PairHit& a, const PairHit& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class TopK {
 public:
  explicit TopK(int k) : k_(static_cast<size_t>(std::max(k, 1))) {}

  [[nodiscard]] bool full() const { return hits_.size() >= k_; }
  [[nodiscard]] double threshold() const { return full() ? hits_.back().value : -1.0; }

  void offer(const PairHit& h) {
    if (full() && !better(h, hits_.back())) return;
    auto it = std::lower_bound(hits_.begin(), hits_.end(), h, better);
    hits_.insert(it, h);
    if (hits_.size() > k_) hits_.pop_back();
  }

  void merge(const TopK& o) {
    for (const auto& h : o.hits_) offer(h);
  }

  [[nodiscard]] const std::vector<PairHit>& hits() const { return hits_; }

 private:
  size_t k_;
  std::vector<PairHit> hits_;
};

// Runs `row(i, top)` for every i and merges per-thread results.
template <class Row>
std::vector<PairHit> run_rows(int m, int top_k, Exec exec, Row row) {
  TopK global(top_k);
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      TopK local(top_k);
#pragma omp for schedule(dynamic, 8) nowait
      for (int i = 0; i < m; ++i) row(i, local);
#pragma omp critical(lvl_pair_merge)
      global.merge(local);
    }
  } else {
    for (int i = 0; i < m; ++i) row(i, global);
  }
  return global.hits();
}

}  // namespace

SampleNet build_net(const JordanCurve& curve, const NetOptions& opts) {
  SampleNet net;
  net.length = curve.length();
  const double L = net.length;
  const int nv = curve.size();
  const int base = std::max(opts.base_points, 4);
  std::vector<std::pair<double, CurvePoint>> cand;
  cand.reserve(static_cast<size_t>(base + nv));
  for (int k = 0; k < base; ++k) {
    const double s = L * k / base;
    cand.emplace_back(s, curve.at_arclength(s));
  }
  for (int i = 0; i < nv; ++i) cand.emplace_back(curve.cumulative()[static_cast<size_t>(i)], CurvePoint{i, 0.0});
  const int room = std::max(0, opts.max_points - base - nv);
  const int levels = std::min(opts.vertex_levels, room / std::max(1, 2 * nv));
  for (int i = 0; i < nv; ++i) {
    const double lp = edge_length(curve.edge(i - 1));
    const double ln = edge_length(curve.edge(i));
    const double l = std::min(lp, ln);
    const double sv = curve.cumulative()[static_cast<size_t>(i)];
    for (int k = 1; k <= levels; ++k) {
      const double d = std::ldexp(l, -k);
      double sb = sv - d;
      if (sb < 0) sb += L;
      cand.emplace_back(sb, CurvePoint{curve.wrap(i - 1), 1.0 - d / lp});
      cand.emplace_back(sv + d, CurvePoint{i, d / ln});
    }
  }
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const double merge = 1e-12 * L;
  for (const auto& [s, cp] : cand) {
    if (!net.arclength.empty() && s - net.arclength.back() <= merge) continue;
    if (!net.arclength.empty() && net.arclength.front() + L - s <= merge) continue;
    net.arclength.push_back(s);
    net.params.push_back(curve.canonical(cp));
    net.points.push_back(curve.point(net.params.back()));
  }
  const int m = net.size();
  net.spacing = net.arclength.front() + L - net.arclength.back();
  for (int i = 1; i < m; ++i) net.spacing = std::max(net.spacing, net.arclength[static_cast<size_t>(i)] - net.arclength[static_cast<size_t>(i - 1)]);

  const size_t mm = static_cast<size_t>(m);
  net.diam.assign(mm * mm, 0.0f);
  for (int len = 1; len < m; ++len) {
    float* row = &net.diam[static_cast<size_t>(len) * mm];
    const float* prev = &net.diam[static_cast<size_t>(len - 1) * mm];
    for (int i = 0; i < m; ++i) {
      const int ip = (i + 1) % m;
      const int j = (i + len) % m;
      const float d = static_cast<float>(dist(net.points[static_cast<size_t>(i)], net.points[static_cast<size_t>(j)]));
      row[i] = std::max({prev[i], prev[ip], d});
    }
  }
  return net;
}

std::vector<PairHit> scan_two_point(const SampleNet& net, int top_k, Exec exec) {
  const int m = net.size();
  return run_rows(m, top_k, exec, [&](int i, TopK& top) {
    for (int j = i + 1; j < m; ++j) {
      const double c = dist(net.points[static_cast<size_t>(i)], net.points[static_cast<size_t>(j)]);
      if (c <= 0) continue;
      const int len = j - i;
      const double d = std::min(net.forward_diameter(i, len), net.forward_diameter(j, m - len));
      top.offer({d / c, i, j});
    }
  });
}

std::vector<PairHit> scan_chord_arc(const SampleNet& net, int top_k, Exec exec) {
  const int m = net.size();
  const double L = net.length;
  return run_rows(m, top_k, exec, [&](int i, TopK& top) {
    for (int j = i + 1; j < m; ++j) {
      const double c = dist(net.points[static_cast<size_t>(i)], net.points[static_cast<size_t>(j)]);
      if (c <= 0) continue;
      const double lf = net.arclength[static_cast<size_t>(j)] - net.arclength[static_cast<size_t>(i)];
      top.offer({std::min(lf, L - lf) / c, i, j});
    }
  });
}

std::vector<PairHit> scan_zeta(const SampleNet& net, double r0, double both_margin, int top_k, Exec exec) {
  const int m = net.size();
  return run_rows(m, top_k, exec, [&](int i, TopK& top) {
    const Point2 x = net.points[static_cast<size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      const Point2 y = net.points[static_cast<size_t>(j)];
      const double c = dist(x, y);
      if (c <= 0 || c > r0) continue;
      const int len = j - i;
      const double df = net.forward_diameter(i, len);
      const double db = net.forward_diameter(j, m - len);
      const bool use_f = df <= db + both_margin;
      const bool use_b = db <= df + both_margin;
      const double bound = std::max(use_f ? df : 0.0, use_b ? db : 0.0) / c;
      if (top.full() && bound < top.threshold()) continue;
      const Point2 u = (y - x) / c;
      double dev = 0.0;
      if (use_f) {
        for (int k = i + 1; k < j; ++k) dev = std::max(dev, std::abs(cross(u, net.points[static_cast<size_t>(k)] - x)));
      }
      if (use_b) {
        for (int k = j + 1; k < i + m; ++k) {
          dev = std::max(dev, std::abs(cross(u, net.points[static_cast<size_t>(k % m)] - x)));
        }
      }
      top.offer({dev / c, i, j});
    }
  });
}

}  // namespace lvl
