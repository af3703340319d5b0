#include "lvl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lvl/distance_field.hpp"

namespace lvl {

std::vector<double> default_schedule(const JordanCurve& curve, int kmin, int kmax) {
  std::vector<double> s;
  for (int k = kmin; k <= kmax; ++k) {
    const double e = std::ldexp(curve.diameter(), -k);
    s.push_back(e);
    s.push_back(-e);
  }
  return s;
}

namespace {

void fail(VerificationReport& rep, Witness w) {
  if (rep.pass) rep.witness = std::move(w);
  rep.pass = false;
}

std::string class_note(const LevelSetResult& lv) {
  return "classification=" + to_string(lv.classification) + " components=" + std::to_string(lv.components);
}

struct LevelRun {
  VerificationReport report;
  std::vector<std::optional<LevelSetResult>> levels;  // set where the level set is a Jordan curve
};

LevelRun run_ljc(const JordanCurve& curve, const std::vector<double>& schedule, Exec exec) {
  LevelRun run;
  auto& rep = run.report;
  rep.suite = "ljc";
  rep.eps_schedule = schedule;
  for (double eps : schedule) {
    EpsOutcome o;
    o.epsilon = eps;
    std::optional<LevelSetResult> keep;
    try {
      LevelSetResult lv = level_set_exact(curve, eps, exec);
      o.classification = lv.classification;
      o.components = lv.components;
      o.branch_points = lv.branch_points;
      o.ok = lv.classification == LevelClass::jordan_curve;
      if (!o.ok) {
        o.note = class_note(lv);
        std::vector<Point2> pts = lv.branch_points;
        pts.insert(pts.end(), lv.isolated_points.begin(), lv.isolated_points.end());
        fail(rep, {eps, pts, static_cast<double>(lv.components), o.note});
      } else {
        keep = std::move(lv);
      }
    } catch (const StitchError& e) {
      o.ok = false;
      o.classification = LevelClass::non_manifold;
      o.note = e.what();
      fail(rep, {eps, {e.location}, 0.0, o.note});
    } catch (const std::invalid_argument& e) {
      o.ok = false;
      o.note = e.what();
      fail(rep, {eps, {}, 0.0, o.note});
    }
    rep.outcomes.push_back(std::move(o));
    run.levels.push_back(std::move(keep));
  }
  return run;
}

double& measure(EpsOutcome& o, const std::string& key) {
  for (auto& [k, v] : o.measures) {
    if (k == key) return v;
  }
  o.measures.emplace_back(key, 0.0);
  return o.measures.back().second;
}

}  // namespace

VerificationReport verify_ljc(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts) {
  return run_ljc(curve, schedule, opts.exec).report;
}

VerificationReport verify_lqc(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts) {
  LevelRun run = run_ljc(curve, schedule, opts.exec);
  VerificationReport rep = run.report;
  rep.suite = "lqc";
  const double diam = curve.diameter();
  const double r0 = opts.r0.value_or(diam);
  const double zeta = zeta_sup(curve, r0, opts.sampler).value;
  const double bound = opts.bound.value_or(4 * two_point_bound(zeta, diam, r0));
  rep.summary = {{"zeta", zeta}, {"r0", r0}, {"bound", bound}};

  std::vector<double> constants(schedule.size(), -1.0);
  double worst = 0.0;
  for (size_t k = 0; k < schedule.size(); ++k) {
    if (!run.levels[k]) continue;
    const double c = two_point_constant(level_curve(*run.levels[k]), opts.sampler).value;
    constants[k] = c;
    measure(rep.outcomes[k], "two_point") = c;
    worst = std::max(worst, c);
    if (c > bound) {
      rep.outcomes[k].ok = false;
      rep.outcomes[k].note = "two-point constant above bound";
      fail(rep, {schedule[k], {}, c, "two_point > bound"});
    }
  }
  rep.summary.emplace_back("max_two_point", worst);

  // Growth across consecutive scales of one sign signals a non-uniform family.
  for (int sign : {1, -1}) {
    int run_len = 0;
    double prev = -1.0;
    for (size_t k = 0; k < schedule.size(); ++k) {
      if ((schedule[k] > 0) != (sign > 0) || constants[k] < 0) continue;
      if (prev > 0 && constants[k] >= opts.trend_factor * prev) {
        ++run_len;
      } else {
        run_len = 0;
      }
      prev = constants[k];
      if (run_len >= opts.trend_run) {
        rep.outcomes[k].ok = false;
        rep.outcomes[k].note = "two-point constant growing across scales";
        fail(rep, {schedule[k], {}, constants[k], "two_point trend"});
      }
    }
  }
  return rep;
}

VerificationReport verify_lca(const JordanCurve& curve, const std::vector<double>& schedule,
                              const VerifyOptions& opts) {
  VerifyOptions qopts = opts;
  qopts.bound.reset();
  VerificationReport lqc = verify_lqc(curve, schedule, qopts);
  VerificationReport rep = lqc;
  rep.suite = "lca";
  rep.pass = true;
  rep.witness.reset();
  const double cg = chord_arc_constant(curve, opts.sampler).value;
  const double bound = opts.bound.value_or(4 * cg);
  rep.summary.emplace_back("lqc_pass", lqc.pass ? 1.0 : 0.0);
  rep.summary.emplace_back("curve_chord_arc", cg);
  rep.summary.emplace_back("chord_arc_bound", bound);
  if (!lqc.pass) fail(rep, lqc.witness.value_or(Witness{0.0, {}, 0.0, "lqc failed"}));
  if (cg > bound) fail(rep, {0.0, {}, cg, "curve chord_arc > bound"});
  double worst = cg;
  for (size_t k = 0; k < schedule.size(); ++k) {
    auto& o = rep.outcomes[k];
    if (o.classification != LevelClass::jordan_curve) continue;
    const double c = chord_arc_constant(level_curve(level_set_exact(curve, schedule[k], opts.exec)), opts.sampler).value;
    measure(o, "chord_arc") = c;
    worst = std::max(worst, c);
    if (c > bound) {
      o.ok = false;
      o.note = "chord-arc constant above bound";
      fail(rep, {schedule[k], {}, c, "chord_arc > bound"});
    }
  }
  rep.summary.emplace_back("max_chord_arc", worst);
  return rep;
}

VerificationReport verify_bounds(const JordanCurve& curve, double r0, const VerifyOptions& opts) {
  if (!(r0 > 0)) throw std::invalid_argument("verify_bounds: r0 must be positive");
  VerificationReport rep;
  rep.suite = "bounds";
  const auto z = zeta_sup(curve, r0, opts.sampler);
  const auto c = two_point_constant(curve, opts.sampler);
  const double bound = two_point_bound(z.value, curve.diameter(), r0);
  rep.summary = {{"r0", r0}, {"zeta", z.value}, {"two_point", c.value}, {"bound", bound}};
  if (c.value > bound + 1e-6) fail(rep, {0.0, {curve.point(c.x), curve.point(c.y)}, c.value, "two_point > bound"});
  return rep;
}

double longest_centred_arc(const JordanCurve& curve, const LevelSetResult& level) {
  const double d = std::abs(level.epsilon);
  const double tol = 8 * curve.tolerance();
  auto centre = [&](const Edge& e) -> std::optional<Point2> {
    const auto* a = std::get_if<CircularArc>(&e);
    if (!a || std::abs(a->radius - d) > tol) return std::nullopt;
    if (unsigned_distance(curve, a->center) > tol) return std::nullopt;
    return a->center;
  };
  double best = 0.0;
  for (const auto& ch : level.chains) {
    const auto& es = ch.edges;
    const size_t n = es.size();
    if (n == 0) continue;
    std::vector<std::optional<Point2>> c(n);
    for (size_t i = 0; i < n; ++i) c[i] = centre(es[i]);
    auto same = [&](size_t i, size_t j) { return c[i] && c[j] && dist(*c[i], *c[j]) <= tol; };
    size_t start = 0;
    if (ch.closed) {
      while (start < n && same((start + n - 1) % n, start)) ++start;
      if (start == n) start = 0;
    }
    double run = 0.0;
    for (size_t k = 0; k < n; ++k) {
      const size_t i = (start + k) % n;
      if (!c[i]) {
        run = 0.0;
        continue;
      }
      if (k > 0 && !same((i + n - 1) % n, i)) run = 0.0;
      run += edge_length(es[i]);
      best = std::max(best, run);
    }
  }
  return best;
}

double max_nearest_span(const JordanCurve& curve, const LevelSetResult& level, int samples_per_edge) {
  double best = 0.0;
  auto probe = [&](Point2 q) {
    const auto np = nearest_points(curve, q);
    if (np.points.size() < 2) return;
    std::vector<Point2> pts;
    for (const auto& cp : np.points) pts.push_back(curve.point(cp));
    best = std::max(best, angular_span(q, pts));
  };
  for (const auto& ch : level.chains) {
    for (const auto& e : ch.edges) {
      probe(edge_start(e));
      for (int k = 0; k < samples_per_edge; ++k) probe(edge_at(e, (k + 0.5) / samples_per_edge));
    }
    if (!ch.closed && !ch.edges.empty()) probe(edge_end(ch.edges.back()));
  }
  return best;
}

std::vector<Subarc> probe_subarcs(const JordanCurve& curve, int count, double frac) {
  const double L = curve.length();
  std::vector<Subarc> out;
  for (int k = 0; k < count; ++k) {
    const double s0 = L * (k + 0.25) / count;
    const double s1 = std::fmod(s0 + frac * L, L);
    out.push_back({curve.at_arclength(s0), curve.at_arclength(s1), SubarcDirection::forward});
  }
  return out;
}

VerificationReport verify_local_lemmas(const JordanCurve& curve, const std::vector<double>& schedule,
                                       const VerifyOptions& opts) {
  VerificationReport rep;
  rep.suite = "lemmas";
  rep.eps_schedule = schedule;
  const auto probes = probe_subarcs(curve, 4, 1.0 / 6.0);
  double worst_arc = 0.0;
  double worst_span = 0.0;
  int worst_subset = 0;
  for (double eps : schedule) {
    EpsOutcome o;
    o.epsilon = eps;
    try {
      const LevelSetResult lv = level_set_exact(curve, eps, opts.exec);
      o.classification = lv.classification;
      o.components = lv.components;
      o.branch_points = lv.branch_points;

      const double arc = longest_centred_arc(curve, lv);
      const double arc_limit = kPi * std::abs(eps);
      measure(o, "centred_arc_ratio") = arc / std::abs(eps);
      worst_arc = std::max(worst_arc, arc / std::abs(eps));
      if (arc > arc_limit + 1e-9) {
        o.ok = false;
        o.note = "centred arc longer than pi |eps|";
        fail(rep, {eps, {}, arc, o.note});
      }

      const double span = max_nearest_span(curve, lv);
      measure(o, "nearest_span") = span;
      worst_span = std::max(worst_span, span);
      if (span > kPi + 1e-6) {
        o.ok = false;
        o.note = "nearest-point set wider than a semicircle";
        fail(rep, {eps, {}, span, o.note});
      }

      if (lv.classification == LevelClass::jordan_curve) {
        int most = 0;
        for (const auto& lam : probes) {
          const auto sub = level_subset_for_subarc(curve, lv, lam);
          const int comps = sub.classification == LevelClass::empty ? 0 : sub.components;
          const bool branched = sub.classification == LevelClass::non_manifold;
          most = std::max(most, branched ? 2 : comps);
        }
        measure(o, "subset_components") = most;
        worst_subset = std::max(worst_subset, most);
        if (most > 1) {
          o.ok = false;
          o.note = "level subset of a subarc is disconnected";
          fail(rep, {eps, {}, static_cast<double>(most), o.note});
        }
      }
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
      fail(rep, {eps, {}, 0.0, o.note});
    }
    rep.outcomes.push_back(std::move(o));
  }

  // Far boundaries of small subarcs are uniformly chord-arc.
  Sampler small = opts.sampler;
  small.base_points = std::min(small.base_points, 512);
  small.max_points = std::min(small.max_points, 1024);
  double worst_brown = 0.0;
  for (const auto& lam : probe_subarcs(curve, 4, 1.0 / 32.0)) {
    const double d = subarc_diameter(curve, lam);
    if (!(d > 0)) continue;
    const double eps = 4 * d;
    const auto b = eps_boundary_of_subarc(curve, lam, eps);
    if (b.classification != LevelClass::jordan_curve) {
      fail(rep, {eps, {curve.point(lam.start), curve.point(lam.end)}, 0.0, "far boundary " + class_note(b)});
      continue;
    }
    const double c = chord_arc_constant(level_curve(b), small).value;
    worst_brown = std::max(worst_brown, c);
    if (c > 10.0) fail(rep, {eps, {curve.point(lam.start), curve.point(lam.end)}, c, "far boundary chord_arc > 10"});
  }
  rep.summary = {{"max_centred_arc_ratio", worst_arc},
                 {"max_nearest_span", worst_span},
                 {"max_subset_components", static_cast<double>(worst_subset)},
                 {"max_far_boundary_chord_arc", worst_brown}};
  return rep;
}

BranchCheck check_branch_point(const JordanCurve& curve, Point2 p, double max_defect) {
  BranchCheck b;
  b.point = p;
  const auto np = nearest_points(curve, p);
  b.nearest = static_cast<int>(np.points.size());
  b.continuum = np.continuum;
  if (b.nearest == 2 && !b.continuum) {
    const Point2 u = curve.point(np.points[0]) - p;
    const Point2 v = curve.point(np.points[1]) - p;
    b.collinearity_defect = std::abs(kPi - std::abs(std::atan2(cross(u, v), dot(u, v))));
    b.ok = b.collinearity_defect <= max_defect;
  }
  return b;
}

}  // namespace lvl
