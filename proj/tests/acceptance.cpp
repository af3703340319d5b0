// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lvl/cli.hpp"
#include "lvl/constants.hpp"
#include "lvl/generators.hpp"
#include "lvl/level_set.hpp"
#include "lvl/verify.hpp"

using namespace lvl;

namespace {

struct Found {
  JordanCurve curve;
  Point2 point;
  std::string where;
};

std::vector<Found> g_branches;

void collect(const JordanCurve& c, const std::vector<Point2>& pts, const std::string& where) {
  for (const auto& p : pts) g_branches.push_back({c, p, where});
}

void collect(const JordanCurve& c, const VerificationReport& r, const std::string& where) {
  for (const auto& o : r.outcomes) collect(c, o.branch_points, where);
}

int vertex_index(const JordanCurve& c, Point2 p) {
  for (int i = 0; i < c.size(); ++i) {
    if (edge_start(c.edge(i)) == p) return i;
  }
  return -1;
}

struct Named {
  std::string name;
  JordanCurve curve;
};

std::vector<Named> snowflakes() {
  std::vector<Named> v;
  for (int d = 0; d <= 3; ++d) {
    v.push_back({"snowflake(6,0.26,d=" + std::to_string(d) + ",all_bump)",
                 rohde_snowflake({6, 0.26, d, ChoiceRule::all_bump, 1})});
  }
  v.push_back({"snowflake(6,0.26,d=3,seeded7)", rohde_snowflake({6, 0.26, 3, ChoiceRule::seeded, 7})});
  v.push_back({"snowflake(6,0.26,d=3,alternating)", rohde_snowflake({6, 0.26, 3, ChoiceRule::alternating, 1})});
  return v;
}

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " (runtime " + std::to_string(secs) + " s over " + std::to_string(limit_s) + " s)";
  }
  if (!o.pass) ++g_failures;
  std::printf("%s %d  %.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

}  // namespace

int main() {
  // 1. Staircase chordal values at tooth feet.
  criterion(1, 1.0, [] {
    const auto st = staircase_sharpljc(8);
    Outcome o;
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      const auto t = staircase_tooth(n);
      const int i = vertex_index(st, t.left_foot);
      const int j = vertex_index(st, t.right_foot);
      if (i < 0 || j < 0) return Outcome{false, "tooth feet not found"};
      const double z = zeta_pair(st, {i, 0.0}, {j, 0.0});
      worst = std::max(worst, std::abs(z - (0.5 + std::ldexp(1.0, -n))));
    }
    o.pass = worst <= 1e-12;
    o.detail = "max |zeta - (1/2 + 2^-n)| = " + fmt("%.3g", worst);
    return o;
  });

  // 2. Staircase branch points and the level subset of a tooth.
  criterion(2, 5.0, [] {
    const auto st = staircase_sharpljc(8);
    Outcome o;
    double worst = 0.0;
    std::string census_note;
    for (int n = 2; n <= 5; ++n) {
      const double eps = std::ldexp(1.0, -n - 3);
      const auto lv = level_set_exact(st, eps);
      collect(st, lv.branch_points, "staircase");
      if (lv.classification != LevelClass::non_manifold || lv.branch_points.size() != 1) {
        return Outcome{false, "n=" + std::to_string(n) + " classification " + to_string(lv.classification)};
      }
      const Point2 want{std::ldexp(1.0, -n) - std::ldexp(1.0, -n - 3), 0.0};
      worst = std::max(worst, dist(lv.branch_points[0], want));
      const auto t = staircase_tooth(n);
      const int i = vertex_index(st, t.left_foot);
      const int j = vertex_index(st, t.right_foot);
      const auto lam = subarc_smaller_diameter(st, {i, 0.0}, {j, 0.0}).arc;
      const auto sub = level_subset_for_subarc(st, lv, lam);
      const auto cen = census(sub.chains);
      int quarter = 0;
      for (const auto& ch : sub.chains) {
        for (const auto& e : ch.edges) {
          if (const auto* a = std::get_if<CircularArc>(&e)) {
            if (std::abs(std::abs(a->sweep) - kPi / 2) <= 1e-9 && std::abs(a->radius - eps) <= 1e-12) ++quarter;
          }
        }
      }
      if (cen.segments != 1 || cen.arcs != 2 || quarter != 2) {
        o.pass = false;
        census_note += " n=" + std::to_string(n) + ":" + std::to_string(cen.segments) + "S+" +
                       std::to_string(cen.arcs) + "A(" + std::to_string(quarter) + " quarter)";
      }
    }
    o.pass = o.pass && worst <= 1e-9;
    o.detail = "max branch offset " + fmt("%.3g", worst) + "; tooth subsets 1 segment + 2 quarter arcs" +
               (census_note.empty() ? "" : " except" + census_note);
    return o;
  });

  // 3. Chordal curves keep Jordan level sets below half their chordal scale.
  criterion(3, 60.0, [] {
    std::vector<Named> curves{{"square", regular_ngon(4, 1)}, {"hexagon", regular_ngon(6, 1)}, {"dumbbell(0.5)", dumbbell(0.5)}};
    for (auto& s : snowflakes()) curves.push_back(std::move(s));
    Outcome o;
    int checked = 0;
    for (const auto& [name, c] : curves) {
      const double r0 = largest_chordal_scale(c, 0.5);
      if (!(r0 > 0)) return Outcome{false, name + ": no scale with zeta_sup <= 1/2"};
      std::vector<double> sched;
      for (double e : default_schedule(c)) {
        if (std::abs(e) < r0 / 2) sched.push_back(e);
      }
      const auto rep = verify_ljc(c, sched);
      collect(c, rep, name);
      checked += static_cast<int>(sched.size());
      if (!rep.pass) {
        o.pass = false;
        o.detail += name + " fails at eps=" + fmt("%g", rep.witness->epsilon) + "; ";
      }
    }
    o.detail += std::to_string(curves.size()) + " curves, " + std::to_string(checked) + " levels checked";
    return o;
  });

  // 4. Two-point constant within max{4 zeta^2 + 2 zeta + 1, diam / r0}.
  criterion(4, 0, [] {
    std::vector<std::pair<Named, double>> cases{{{"square", regular_ngon(4, 1)}, std::sqrt(2.0)},
                                                {{"hexagon", regular_ngon(6, 1)}, 2.0},
                                                {{"circle", circle_curve(1)}, 2.0}};
    for (auto& s : snowflakes()) cases.push_back({s, s.curve.diameter()});
    Outcome o;
    for (const auto& [nc, r0] : cases) {
      const auto rep = verify_bounds(nc.curve, r0);
      double c = 0, b = 0;
      for (const auto& [k, v] : rep.summary) {
        if (k == "two_point") c = v;
        if (k == "bound") b = v;
      }
      if (nc.name == "square" || nc.name == "hexagon" || nc.name == "circle") {
        o.detail += nc.name + " C=" + fmt("%.4f", c) + "<=" + fmt("%.4f", b) + " ";
      }
      if (!rep.pass) {
        o.pass = false;
        o.detail += "[" + nc.name + " fails] ";
      }
    }
    return o;
  });

  // 5. Exact chains against the marching-squares oracle.
  criterion(5, 120.0, [] {
    std::vector<Named> curves{{"square", regular_ngon(4, 1)},
                              {"circle", circle_curve(1)},
                              {"hexagon", regular_ngon(6, 1)},
                              {"dumbbell(0.5)", dumbbell(0.5)}};
    const double levels[] = {0.2, 0.1, 0.05, -0.05, -0.1, -0.2};
    Outcome o;
    double worst_ratio = 0.0;
    for (const auto& [name, c] : curves) {
      for (double eps : levels) {
        const double h = std::abs(eps) / 16;
        const auto lv = level_set_exact(c, eps);
        collect(c, lv.branch_points, name);
        const auto grid = level_set_grid(c, eps, h);
        const double hd = hausdorff_distance(lv.chains, grid, h / 4);
        worst_ratio = std::max(worst_ratio, hd / h);
        if (hd > 2 * h) {
          o.pass = false;
          o.detail += name + " eps=" + fmt("%g", eps) + " d=" + fmt("%.3g", hd) + "; ";
        }
      }
    }
    o.detail += "max Hausdorff/h = " + fmt("%.3f", worst_ratio) + " (limit 2)";
    return o;
  });

  // 6. Offset lengths of the unit square.
  criterion(6, 0, [] {
    const auto sq = regular_ngon(4, 1);
    auto length = [&](double eps) {
      double s = 0;
      for (const auto& ch : level_set_exact(sq, eps).chains) {
        for (const auto& e : ch.edges) s += edge_length(e);
      }
      return s;
    };
    double worst = 0.0;
    for (double e : {0.1, 0.25, 0.5}) worst = std::max(worst, std::abs(length(-e) - (4 + kTwoPi * e)));
    for (double e : {0.1, 0.25, 0.4}) worst = std::max(worst, std::abs(length(e) - 4 * (1 - 2 * e)));
    return Outcome{worst <= 1e-9, "max length error " + fmt("%.3g", worst)};
  });

  // 7. Constant witnesses.
  criterion(7, 0, [] {
    const auto ci = circle_curve(1);
    const auto sq = regular_ngon(4, 1);
    const auto hex = regular_ngon(6, 1);
    const double tp = two_point_constant(ci).value;
    const double cac = chord_arc_constant(ci).value;
    const double cas = chord_arc_constant(sq).value;
    const double zh = zeta_sup(hex, 1.0).value;
    const bool ok = std::abs(tp - 1) <= 1e-6 && std::abs(cac - kPi / 2) <= 1e-3 && std::abs(cas - 2) <= 1e-3 &&
                    std::abs(zh - 1 / (2 * std::sqrt(3.0))) <= 1e-6;
    return Outcome{ok, "circle 2pt=" + fmt("%.9f", tp) + " circle ca=" + fmt("%.6f", cac) + " square ca=" +
                           fmt("%.6f", cas) + " hexagon zeta=" + fmt("%.9f", zh)};
  });

  // 8. Growing two-point constants on the sharp-corner curve.
  criterion(8, 0, [] {
    const auto sl = sharplqc_curve(24, 4);
    std::vector<double> sched;
    std::string list;
    for (int n = 1; n <= 4; ++n) {
      sched.push_back(std::pow(4.0, -n - 2));
      list += (n > 1 ? "," : "") + fmt("%.17g", sched.back());
    }
    const auto rep = verify_lqc(sl, sched);
    Outcome o;
    std::vector<double> cs;
    for (const auto& oc : rep.outcomes) {
      double c = -1;
      for (const auto& [k, v] : oc.measures) {
        if (k == "two_point") c = v;
      }
      cs.push_back(c);
      o.detail += fmt("%.3f ", c);
    }
    for (size_t k = 1; k < cs.size(); ++k) {
      if (!(cs[k - 1] > 0 && cs[k] >= 1.2 * cs[k - 1])) o.pass = false;
    }
    if (rep.pass) o.pass = false;
    // The command-line verdict must agree.
    const std::string path = "acceptance_sharplqc.crv";
    std::ostringstream out, err;
    const char* gen[] = {"lvl", "gen", "sharplqc", "--n", "24", "--nmax", "4", "-o", path.c_str()};
    cli_main(9, gen, out, err);
    const char* ver[] = {"lvl", "verify", "lqc", "-i", path.c_str(), "--eps-list", list.c_str()};
    const int code = cli_main(7, ver, out, err);
    if (code != 1) o.pass = false;
    std::remove(path.c_str());
    o.detail += "verify lqc exit=" + std::to_string(code);
    return o;
  });

  // 9. Local lemma checks across the default schedule.
  criterion(9, 0, [] {
    std::vector<Named> curves{{"square", regular_ngon(4, 1)}, {"hexagon", regular_ngon(6, 1)}, {"dumbbell(0.5)", dumbbell(0.5)}};
    for (auto& s : snowflakes()) curves.push_back(std::move(s));
    Outcome o;
    double arc = 0, span = 0, brown = 0;
    for (const auto& [name, c] : curves) {
      const auto rep = verify_local_lemmas(c, default_schedule(c));
      collect(c, rep, name);
      for (const auto& [k, v] : rep.summary) {
        if (k == "max_centred_arc_ratio") arc = std::max(arc, v);
        if (k == "max_nearest_span") span = std::max(span, v);
        if (k == "max_far_boundary_chord_arc") brown = std::max(brown, v);
      }
      if (!rep.pass) {
        o.pass = false;
        o.detail += name + ": " + rep.witness->what + "; ";
      }
    }
    o.detail += "max arc/|eps|=" + fmt("%.4f", arc) + " max span=" + fmt("%.4f", span) + " max far chord-arc=" +
                fmt("%.4f", brown);
    return o;
  });

  // 10. Every branch point seen above has two antipodal nearest points.
  criterion(10, 0, [] {
    Outcome o;
    double worst = 0.0;
    for (const auto& f : g_branches) {
      const auto b = check_branch_point(f.curve, f.point);
      worst = std::max(worst, b.collinearity_defect);
      if (!b.ok) {
        o.pass = false;
        o.detail += f.where + " (" + fmt("%g", f.point.x) + "," + fmt("%g", f.point.y) + ") nearest=" +
                    std::to_string(b.nearest) + "; ";
      }
    }
    if (g_branches.empty()) o.pass = false;
    o.detail += std::to_string(g_branches.size()) + " branch points, max defect " + fmt("%.3g", worst) + " rad";
    return o;
  });

  return g_failures == 0 ? 0 : 1;
}
