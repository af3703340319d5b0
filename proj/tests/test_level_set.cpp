#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lvl/distance_field.hpp"
#include "lvl/generators.hpp"
#include "lvl/level_set.hpp"
#include "oracles.hpp"

using namespace lvl;

namespace {

std::vector<Point2> chain_samples(const std::vector<Chain>& chains, int per_edge) {
  std::vector<Point2> out;
  for (const auto& c : chains)
    for (const auto& e : c.edges)
      for (int k = 0; k <= per_edge; ++k) out.push_back(edge_at(e, static_cast<double>(k) / per_edge));
  return out;
}

}  // namespace

TEST_CASE("square inner and outer levels") {
  const auto sq = regular_ngon(4, 1);
  const auto in = level_set_exact(sq, 0.25);
  CHECK(in.classification == LevelClass::jordan_curve);
  REQUIRE(in.chains.size() == 1);
  const auto ic = census(in.chains);
  CHECK(ic.segments == 4);
  CHECK(ic.arcs == 0);
  CHECK(level_curve(in).length() == doctest::Approx(2.0));

  const auto out = level_set_exact(sq, -0.25);
  CHECK(out.classification == LevelClass::jordan_curve);
  const auto oc = census(out.chains);
  CHECK(oc.segments == 4);
  CHECK(oc.arcs == 4);
  CHECK(level_curve(out).length() == doctest::Approx(4.0 + 2 * kPi * 0.25));
}

TEST_CASE("empty and degenerate square levels") {
  const auto sq = regular_ngon(4, 1);
  CHECK(level_set_exact(sq, 0.75).classification == LevelClass::empty);
  const auto centre = level_set_exact(sq, 0.5);
  REQUIRE(centre.isolated_points.size() == 1);
  CHECK(centre.isolated_points[0].x == doctest::Approx(0.5));
  CHECK(centre.isolated_points[0].y == doctest::Approx(0.5));
}

TEST_CASE("staircase tooth 1 pinches at its branch point") {
  const auto st = staircase_sharpljc(4);
  const auto lv = level_set_exact(st, 1.0 / 16);
  CHECK(lv.classification == LevelClass::non_manifold);
  bool found = false;
  for (const auto& b : lv.branch_points)
    if (dist(b, {7.0 / 16, 0.0}) < 1e-12) found = true;
  CHECK(found);
}

TEST_CASE("level points have the prescribed signed distance") {
  for (const auto& c : {rohde_snowflake({6, 0.3, 3, ChoiceRule::seeded, 3}), sharplqc_curve(24, 3), dumbbell(0.3),
                        staircase_sharpljc(5)}) {
    for (double e : {0.04, -0.04, 0.011, -0.011}) {
      const auto lv = level_set_exact(c, e);
      const auto pts = chain_samples(lv.chains, 7);
      REQUIRE(!pts.empty());
      for (const auto& p : pts) CHECK(std::abs(signed_distance(c, p) - e) <= 1e-9 * c.diameter());
    }
  }
}

TEST_CASE("random soundness check on a snowflake") {
  const auto c = rohde_snowflake({6, 0.3, 2, ChoiceRule::all_bump, 1});
  const double e = -0.05;
  const auto lv = level_set_exact(c, e);
  const auto pts = chain_samples(lv.chains, 40);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const Point2 p = pts[pick(rng)];
    CHECK(std::abs(signed_distance(c, p) - e) <= 1e-9 * c.diameter());
  }
}

TEST_CASE("exact levels agree with the grid contour") {
  const auto c = sharplqc_curve(24, 2);
  for (double e : {0.1, -0.1}) {
    const double h = 0.01;
    const auto lv = level_set_exact(c, e);
    const auto g = level_set_grid(c, e, h);
    CHECK(hausdorff_distance(lv.chains, g, h / 4) <= h);
  }
}

TEST_CASE("subset of the level near a subarc") {
  const auto sq = regular_ngon(4, 1);
  const Subarc bottom{{0, 0}, {0, 1}, SubarcDirection::forward};
  for (double e : {0.25, -0.25}) {
    const auto lv = level_set_exact(sq, e);
    const auto sub = level_subset_for_subarc(sq, lv, bottom);
    const auto pts = chain_samples(sub.chains, 5);
    REQUIRE(!pts.empty());
    for (const auto& p : pts) {
      // Distance to the closed bottom edge, by hand.
      const double cx = std::clamp(p.x, 0.0, 1.0);
      CHECK(std::hypot(p.x - cx, p.y) == doctest::Approx(0.25));
    }
    double len = 0;
    for (const auto& ch : sub.chains)
      for (const auto& ed : ch.edges) len += edge_length(ed);
    // Outside, the corner arcs around (0,0) and (1,0) are also at distance 1/4 from the edge.
    CHECK(len == doctest::Approx(e > 0 ? 0.5 : 1.0 + kPi / 4));
    CHECK(sub.chains.size() == 1);
  }
}

TEST_CASE("eps boundaries of points and segments") {
  const auto pt = eps_boundary_of_set({}, {{1, 2}}, 0.5);
  CHECK(pt.classification == LevelClass::jordan_curve);
  CHECK(level_curve(pt).length() == doctest::Approx(kPi));

  const auto seg = eps_boundary_of_set({Segment{{0, 0}, {1, 0}}}, {}, 2.0);
  CHECK(seg.classification == LevelClass::jordan_curve);
  CHECK(level_curve(seg).length() == doctest::Approx(2.0 + 4 * kPi));

  const auto sq = regular_ngon(4, 1);
  const Subarc corner{{0, 0.5}, {1, 0.5}, SubarcDirection::forward};
  const auto cb = eps_boundary_of_subarc(sq, corner, 0.1);
  CHECK(cb.classification == LevelClass::jordan_curve);
  // Outer sides 1, inner sides 2 (0.5 - 0.1), two end caps and the outer corner quarter arc.
  CHECK(level_curve(cb).length() == doctest::Approx(1.0 + 0.8 + 2 * kPi * 0.1 + kPi / 2 * 0.1));
}

TEST_CASE("region component counts") {
  const auto sq = regular_ngon(4, 1);
  CHECK(classify_components(sq, 0.25).count == 1);
  CHECK(classify_components(sq, 0.75).count == 0);
  const auto db = dumbbell(0.2);
  const auto two = classify_components(db, 0.15);
  CHECK(two.count == 2);
  CHECK(two.validated);
  CHECK(classify_components(db, 0.05).count == 1);
}

TEST_CASE("serial and parallel extraction agree") {
  const auto c = rohde_snowflake({6, 0.3, 3, ChoiceRule::seeded, 8});
  for (double e : {0.02, -0.02}) {
    const auto a = level_set_exact(c, e, Exec::serial);
    const auto b = level_set_exact(c, e, Exec::parallel);
    CHECK(a.classification == b.classification);
    REQUIRE(a.chains.size() == b.chains.size());
    for (size_t i = 0; i < a.chains.size(); ++i) {
      REQUIRE(a.chains[i].edges.size() == b.chains[i].edges.size());
      for (size_t k = 0; k < a.chains[i].edges.size(); ++k)
        CHECK(edge_start(a.chains[i].edges[k]) == edge_start(b.chains[i].edges[k]));
    }
  }
}

TEST_CASE("marching squares on a disk") {
  const auto c = circle_curve(1);
  const double h = 0.02;
  const auto g = level_set_grid(c, 0.5, h);
  REQUIRE(g.size() == 1);
  CHECK(g[0].closed);
  for (const auto& p : g[0].points) CHECK(std::abs(norm(p) - 0.5) <= h);
}
