#include <doctest.h>

#include <cmath>

#include "lvl/geom.hpp"

using namespace lvl;

TEST_CASE("crossing segments meet at one interior point") {
  const Edge a = Segment{{0, 0}, {2, 2}};
  const Edge b = Segment{{0, 2}, {2, 0}};
  const auto r = intersect(a, b, 1e-12);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].point.x == doctest::Approx(1.0));
  CHECK(r.points[0].point.y == doctest::Approx(1.0));
  CHECK(r.points[0].t1 == doctest::Approx(0.5));
  CHECK(r.points[0].t2 == doctest::Approx(0.5));
  CHECK(r.overlaps.empty());
}

TEST_CASE("collinear segments report their overlap") {
  const Edge a = Segment{{0, 0}, {2, 0}};
  const Edge b = Segment{{1, 0}, {3, 0}};
  const auto r = intersect(a, b, 1e-12);
  REQUIRE(r.overlaps.size() == 1);
  CHECK(r.overlaps[0].t1_begin == doctest::Approx(0.5));
  CHECK(r.overlaps[0].t1_end == doctest::Approx(1.0));
}

TEST_CASE("disjoint and parallel segments do not intersect") {
  CHECK(intersect(Segment{{0, 0}, {1, 0}}, Segment{{0, 1}, {1, 1}}, 1e-12).points.empty());
  CHECK(intersect(Segment{{0, 0}, {1, 0}}, Segment{{2, -1}, {2, 1}}, 1e-12).points.empty());
}

TEST_CASE("segment through a circle hits it twice; a tangent once") {
  const Edge circle = CircularArc{{0, 0}, 1, 0, kTwoPi};
  const auto r = intersect(Segment{{-2, 0}, {2, 0}}, circle, 1e-12);
  REQUIRE(r.points.size() == 2);
  for (const auto& p : r.points) CHECK(std::abs(p.point.x) == doctest::Approx(1.0));
  const auto t = intersect(Segment{{-2, 1}, {2, 1}}, circle, 1e-12);
  REQUIRE(t.points.size() == 1);
  CHECK(t.points[0].point.x == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("arc intersections respect the sweep") {
  const Edge upper = CircularArc{{0, 0}, 1, 0, kPi};
  const auto r = intersect(Segment{{-2, -0.5}, {2, -0.5}}, upper, 1e-12);
  CHECK(r.points.empty());
  const Edge other = CircularArc{{1, 0}, 1, 0, kTwoPi};
  const auto rr = intersect(upper, other, 1e-12);
  REQUIRE(rr.points.size() == 1);
  CHECK(rr.points[0].point.x == doctest::Approx(0.5));
  CHECK(rr.points[0].point.y == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("co-circular arcs overlap") {
  const Edge a = CircularArc{{0, 0}, 1, 0, kPi};
  const Edge b = CircularArc{{0, 0}, 1, kPi / 2, kPi};
  const auto r = intersect(a, b, 1e-12);
  REQUIRE(r.overlaps.size() == 1);
  CHECK(r.overlaps[0].t1_begin == doctest::Approx(0.5));
  CHECK(r.overlaps[0].t1_end == doctest::Approx(1.0));
}

TEST_CASE("closest point on segment and arc") {
  const auto c = closest_on_segment({0.5, 2}, Segment{{0, 0}, {1, 0}});
  CHECK(c.distance == doctest::Approx(2.0));
  CHECK(c.t == doctest::Approx(0.5));
  const auto e = closest_on_segment({-1, 1}, Segment{{0, 0}, {1, 0}});
  CHECK(e.distance == doctest::Approx(std::sqrt(2.0)));
  CHECK(e.t == 0.0);
  const CircularArc arc{{0, 0}, 1, 0, kPi / 2};
  const auto a = closest_on_arc({2, 2}, arc);
  CHECK(a.distance == doctest::Approx(2 * std::sqrt(2.0) - 1));
  CHECK(a.t == doctest::Approx(0.5));
  // Off the sweep: nearest is an endpoint.
  const auto b = closest_on_arc({0, -2}, arc);
  CHECK(b.distance == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("distance of an arc from a line uses the extremal point") {
  const CircularArc arc{{0, 0}, 1, 0, kPi};
  const Line l{{-5, 0}, {1, 0}};
  CHECK(max_dist_to_line(arc, l) == doctest::Approx(1.0));
  const CircularArc small{{0, 0}, 1, kPi / 4, kPi / 2};
  CHECK(max_dist_to_line(small, l) == doctest::Approx(1.0));
  const Line v{{0, 0}, {0, 1}};
  CHECK(max_dist_to_line(small, v) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("orientation predicate") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::left);
  CHECK(orientation({0, 0}, {1, 0}, {0, -1}) == Orientation::right);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::collinear);
}

TEST_CASE("edge helpers") {
  const Edge arc = CircularArc{{0, 0}, 2, 0, -kPi / 2};
  CHECK(edge_length(arc) == doctest::Approx(kPi));
  CHECK(edge_end(arc).y == doctest::Approx(-2.0));
  const Edge rev = edge_reversed(arc);
  CHECK(edge_start(rev).y == doctest::Approx(-2.0));
  CHECK(edge_end(rev).x == doctest::Approx(2.0));
  const Edge sub = edge_sub(Segment{{0, 0}, {4, 0}}, 0.25, 0.5);
  CHECK(edge_start(sub).x == doctest::Approx(1.0));
  CHECK(edge_end(sub).x == doctest::Approx(2.0));
  const Point2 t = edge_tangent(arc, 0.0);
  CHECK(t.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.y == doctest::Approx(-1.0));
  CHECK(wrap_angle(-kPi / 2) == doctest::Approx(1.5 * kPi));
}
