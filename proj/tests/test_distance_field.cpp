#include <doctest.h>

#include <cmath>
#include <random>

#include "lvl/distance_field.hpp"
#include "lvl/generators.hpp"
#include "oracles.hpp"

using namespace lvl;

TEST_CASE("signed distance of the unit square") {
  const auto sq = regular_ngon(4, 1);
  CHECK(signed_distance(sq, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(signed_distance(sq, {2, 0.5}) == doctest::Approx(-1.0));
  CHECK(signed_distance(sq, {-1, -1}) == doctest::Approx(-std::sqrt(2.0)));
  const auto on = signed_distance_info(sq, {1, 0.5});
  CHECK(on.value == 0.0);
  CHECK(on.side == Side::on_boundary);
}

TEST_CASE("signed distance agrees with a dense-sample oracle") {
  for (const auto& c : {staircase_sharpljc(5), sharplqc_curve(24, 3), rohde_snowflake({6, 0.3, 2, ChoiceRule::seeded, 2}),
                        dumbbell(0.3)}) {
    const double step = c.length() / 20000;
    const auto pts = oracle::dense_points(c, step);
    const auto poly = oracle::dense_points(c, step);
    std::mt19937_64 rng(7);
    const Box b = c.bbox();
    std::uniform_real_distribution<double> ux(b.xmin - 0.3, b.xmax + 0.3), uy(b.ymin - 0.3, b.ymax + 0.3);
    for (int k = 0; k < 300; ++k) {
      const Point2 p{ux(rng), uy(rng)};
      const double d = oracle::min_dist(pts, p);
      if (d < 4 * step) continue;
      const double s = signed_distance(c, p);
      CHECK(std::abs(s) <= d + 1e-12);
      CHECK(std::abs(s) >= d - step);
      CHECK((s > 0) == oracle::inside(poly, p));
    }
  }
}

TEST_CASE("signed distance is 1-Lipschitz") {
  const auto c = rohde_snowflake({6, 0.3, 3, ChoiceRule::all_bump, 1});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.5, 2.5), n(-0.05, 0.05);
  for (int k = 0; k < 500; ++k) {
    const Point2 p{u(rng), u(rng)};
    const Point2 q = p + Point2{n(rng), n(rng)};
    CHECK(std::abs(signed_distance(c, p) - signed_distance(c, q)) <= dist(p, q) + 1e-12);
  }
}

TEST_CASE("nearest point sets") {
  const auto sq = regular_ngon(4, 1);
  const auto c = nearest_points(sq, {0.5, 0.5});
  CHECK(c.points.size() == 4);
  CHECK(c.distance == doctest::Approx(0.5));
  for (const auto& p : c.points) CHECK(p.t == doctest::Approx(0.5));
  const auto one = nearest_points(sq, {0.5, 0.25});
  REQUIRE(one.points.size() == 1);
  CHECK(sq.point(one.points[0]).y == doctest::Approx(0.0));

  const auto st = staircase_sharpljc(4);
  const auto br = nearest_points(st, {7.0 / 16, 0.0});
  CHECK(br.distance == doctest::Approx(1.0 / 16));
  REQUIRE(br.points.size() == 2);
  const Point2 a = st.point(br.points[0]);
  const Point2 b = st.point(br.points[1]);
  CHECK(std::min(a.x, b.x) == doctest::Approx(3.0 / 8));
  CHECK(std::max(a.x, b.x) == doctest::Approx(0.5));
  CHECK(angular_span({7.0 / 16, 0.0}, {a, b}) == doctest::Approx(kPi));

  const auto circ = nearest_points(circle_curve(1), {0, 0});
  CHECK(circ.continuum);
}

TEST_CASE("angular span") {
  CHECK(angular_span({0, 0}, {{1, 0}, {0, 1}}) == doctest::Approx(kPi / 2));
  CHECK(angular_span({0, 0}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) == doctest::Approx(1.5 * kPi));
}

TEST_CASE("grid sampling") {
  const auto sq = regular_ngon(4, 1);
  const auto g = grid_sample(sq, {-1, -1, 2, 2}, 0.5);
  CHECK(g.nx == 7);
  CHECK(g.ny == 7);
  CHECK(g.at(3, 3) == doctest::Approx(0.5));
  CHECK(g.node(3, 3).x == doctest::Approx(0.5));
  const auto c = grid_sample(circle_curve(1), {-1, -1, 1, 1}, 0.25);
  CHECK(c.at(4, 4) == doctest::Approx(1.0));
}

TEST_CASE("serial and parallel grids are identical") {
  const auto c = rohde_snowflake({6, 0.3, 3, ChoiceRule::seeded, 4});
  const Box b{-0.5, -0.5, 2.5, 2.5};
  const auto a = grid_sample(c, b, 0.01, kDefaultGridCap, Exec::serial);
  const auto p = grid_sample(c, b, 0.01, kDefaultGridCap, Exec::parallel);
  CHECK(a.values == p.values);
}

TEST_CASE("grid cap refuses with a spacing hint") {
  const auto sq = regular_ngon(4, 1);
  try {
    (void)grid_sample(sq, {0, 0, 1, 1}, 1e-3, 1000);
    FAIL("expected refusal");
  } catch (const GridCapExceeded& e) {
    CHECK(e.nodes > 1000);
    const auto [nx, ny] = grid_dims({0, 0, 1, 1}, e.required_h);
    CHECK(static_cast<size_t>(nx) * static_cast<size_t>(ny) <= 1000);
  }
}

TEST_CASE("grid nodes near the curve are within h of zero") {
  const auto c = sharplqc_curve(24, 2);
  const double h = 0.05;
  const auto g = grid_sample(c, c.bbox(), h);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (unsigned_distance(c, g.node(i, j)) <= h / 2) CHECK(std::abs(g.at(i, j)) <= h);
    }
  }
}

TEST_CASE("nearest-point segments do not cross") {
  const auto c = rohde_snowflake({6, 0.3, 2, ChoiceRule::all_bump, 1});
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<std::pair<Point2, Point2>> segs;
  while (segs.size() < 60) {
    const Point2 p{u(rng) - 0.5, u(rng)};
    CurvePoint q;
    if (signed_distance(c, p) <= 0) continue;
    unsigned_distance(c, p, &q);
    segs.emplace_back(p, c.point(q));
  }
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const auto r = intersect(Segment{segs[i].first, segs[i].second}, Segment{segs[j].first, segs[j].second}, 1e-12);
      for (const auto& x : r.points) {
        const bool interior = x.t1 > 1e-9 && x.t1 < 1 - 1e-9 && x.t2 > 1e-9 && x.t2 < 1 - 1e-9;
        CHECK(!interior);
      }
    }
  }
}
