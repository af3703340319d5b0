#include <doctest.h>

#include <cmath>
#include <random>

#include "lvl/curve.hpp"
#include "lvl/generators.hpp"
#include "oracles.hpp"

using namespace lvl;

TEST_CASE("square basics") {
  const auto sq = regular_ngon(4, 1);
  CHECK(sq.size() == 4);
  CHECK(sq.length() == doctest::Approx(4.0));
  CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq.signed_area() == doctest::Approx(1.0));
  CHECK(validate(sq).ok());
  CHECK(sq.tolerance() == doctest::Approx(1e-9 * std::sqrt(2.0)));
}

TEST_CASE("circle from arcs") {
  const auto c = circle_curve(2.0);
  CHECK(c.length() == doctest::Approx(4 * kPi));
  CHECK(c.diameter() == doctest::Approx(4.0));
  CHECK(c.signed_area() == doctest::Approx(4 * kPi));
  CHECK(validate(c).ok());
}

TEST_CASE("validation finds each kind of defect") {
  const std::vector<Point2> bow{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  const auto r = validate(JordanCurve::polygon(bow));
  CHECK(r.kind == Violation::self_intersection);
  CHECK(r.location.x == doctest::Approx(0.5));

  const std::vector<Point2> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  JordanCurve c = JordanCurve::polygon(cw);
  CHECK(validate(c).kind == Violation::negative_orientation);
  CHECK(validate(c, true).ok());
  CHECK(c.signed_area() == doctest::Approx(1.0));

  const JordanCurve open({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {1, 1}}, Segment{{1, 1}, {0, 0.5}}});
  CHECK(validate(open).kind == Violation::open_chain);

  const JordanCurve degen({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {1, 0}}, Segment{{1, 0}, {0, 1}},
                           Segment{{0, 1}, {0, 0}}});
  CHECK(validate(degen).kind == Violation::degenerate_edge);

  // A spike touching another edge.
  const std::vector<Point2> touch{{0, 0}, {2, 0}, {2, 2}, {1, 0}, {0, 2}};
  CHECK(validate(JordanCurve::polygon(touch)).kind == Violation::self_intersection);
}

TEST_CASE("arclength round trip and canonical points") {
  const auto hex = regular_ngon(6, 1);
  for (double s : {0.0, 0.3, 1.0, 2.5, 5.999}) {
    const auto p = hex.at_arclength(s);
    CHECK(hex.arclength(p) == doctest::Approx(s));
  }
  CHECK(hex.canonical({2, 1.0}) == CurvePoint{3, 0.0});
  CHECK(hex.canonical({5, 1.0}) == CurvePoint{0, 0.0});
}

TEST_CASE("subarcs of the square") {
  const auto sq = regular_ngon(4, 1);
  const CurvePoint x{0, 0.5};
  const CurvePoint y{1, 0.5};
  const Subarc f{x, y, SubarcDirection::forward};
  CHECK(subarc_length(sq, f) == doctest::Approx(1.0));
  CHECK(subarc_length(sq, complement(f)) == doctest::Approx(3.0));
  CHECK(subarc_diameter(sq, f) == doctest::Approx(std::sqrt(0.5)));
  CHECK(subarc_diameter(sq, complement(f)) == doctest::Approx(std::sqrt(2.0)));  // holds (0,0) and (1,1)
  const auto pieces = subarc_pieces(sq, complement(f));
  REQUIRE(pieces.size() == 4);
  CHECK(edge_start(pieces.front()).x == doctest::Approx(0.5));
  const auto choice = subarc_smaller_diameter(sq, x, y);
  CHECK(choice.arc.direction == SubarcDirection::forward);
  CHECK(!choice.tied);
  const auto opp = shorter_subarc_by_length(sq, {0, 0.5}, {2, 0.5});
  CHECK(opp.tied);
  CHECK(opp.measure == doctest::Approx(2.0));
}

TEST_CASE("diameter of arc unions matches dense sampling") {
  const auto c = sharplqc_curve(24, 2);
  const auto pts = oracle::dense_points(c, c.length() / 4000);
  double best = 0;
  for (size_t i = 0; i < pts.size(); i += 3)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, dist(pts[i], pts[j]));
  CHECK(c.diameter() >= best - 1e-12);
  CHECK(c.diameter() <= best + c.length() / 4000);
  const std::vector<Edge> half{CircularArc{{0, 0}, 1, 0.3, 2.0}};
  CHECK(edges_diameter(half) == doctest::Approx(2 * std::sin(1.0)));
}

TEST_CASE("winding number agrees with ray casting") {
  const auto c = staircase_sharpljc(4);
  const auto poly = oracle::dense_points(c, 1e-3);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-1.5, 2.5), uy(-3.5, 1.0);
  for (int k = 0; k < 500; ++k) {
    const Point2 p{ux(rng), uy(rng)};
    if (unsigned_distance(c, p) < 1e-6) continue;
    const bool in = oracle::inside(poly, p);
    CHECK(winding_number(c, p) == (in ? 1 : 0));
    CHECK(contains(c, p) == (in ? Side::inside : Side::outside));
  }
  CHECK(contains(c, {0.5, 0.0}) == Side::on_boundary);
}

TEST_CASE("winding number with arcs") {
  const auto c = circle_curve(1);
  CHECK(winding_number(c, {0.2, 0.3}) == 1);
  CHECK(winding_number(c, {0.2, 1.3}) == 0);
  CHECK(winding_number(c.reversed(), {0.2, 0.3}) == -1);
  const auto s = sharplqc_curve(24, 3);
  CHECK(contains(s, {0.5, 0.005}) == Side::inside);  // under the first bump
  CHECK(contains(s, {0.5, 0.02}) == Side::outside);
  CHECK(contains(s, {0.6, 0.005}) == Side::outside);
}

TEST_CASE("box sweep finds exactly the overlapping pairs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 10), w(0, 1);
  std::vector<Box> boxes;
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng), y = u(rng);
    boxes.push_back({x, y, x + w(rng), y + w(rng)});
  }
  const auto pairs = box_overlap_pairs(boxes, 0.0);
  size_t brute = 0;
  for (size_t i = 0; i < boxes.size(); ++i)
    for (size_t j = i + 1; j < boxes.size(); ++j) brute += boxes[i].overlaps(boxes[j], 0.0) ? 1 : 0;
  CHECK(pairs.size() == brute);
}

TEST_CASE("rotation and reversal keep the point set") {
  const auto hex = regular_ngon(6, 1);
  const auto r = hex.rotated(2);
  CHECK(r.length() == doctest::Approx(hex.length()));
  CHECK(edge_start(r.edge(0)) == edge_start(hex.edge(2)));
  CHECK(hex.reversed().signed_area() == doctest::Approx(-hex.signed_area()));
}

TEST_CASE("staircase length matches a polyline sum") {
  const auto st = staircase_sharpljc(4);
  const auto v = st.vertices();
  double s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += std::hypot(v[(i + 1) % v.size()].x - v[i].x, v[(i + 1) % v.size()].y - v[i].y);
  CHECK(st.length() == doctest::Approx(s).epsilon(1e-14));
  // Teeth add twice their heights to the 3 x 3 box perimeter.
  double teeth = 0;
  for (int n = 0; n < 4; ++n) teeth += 2 * staircase_tooth(n).height;
  CHECK(st.length() == doctest::Approx(12.0 + teeth).epsilon(1e-14));
}

TEST_CASE("smaller-diameter subarc examples") {
  const auto sq = regular_ngon(4, 1);
  const auto corner = subarc_smaller_diameter(sq, {0, 0.9}, {1, 0.1});
  const auto pieces = subarc_pieces(sq, corner.arc);
  REQUIRE(pieces.size() == 2);
  CHECK(edge_end(pieces[0]) == Point2{1, 0});
  CHECK(corner.other_measure >= corner.measure);

  const auto c = circle_curve(1);
  const auto anti = subarc_smaller_diameter(c, {0, 0.25}, {1, 0.25});
  CHECK(anti.tied);
  CHECK(anti.measure == doctest::Approx(2.0));

  const auto st = staircase_sharpljc(4);
  const auto t = staircase_tooth(1);
  int i = -1, j = -1;
  for (int k = 0; k < st.size(); ++k) {
    if (edge_start(st.edge(k)) == t.left_foot) i = k;
    if (edge_start(st.edge(k)) == t.right_foot) j = k;
  }
  const auto tooth = subarc_smaller_diameter(st, {i, 0}, {j, 0});
  const auto tp = subarc_pieces(st, tooth.arc);
  CHECK(tp.size() == 3);
  CHECK(subarc_length(st, tooth.arc) == doctest::Approx(2 * t.height + 0.125));
}

TEST_CASE("shorter subarc by length examples") {
  const auto sq = regular_ngon(4, 1);
  const auto adj = shorter_subarc_by_length(sq, {0, 0.5}, {1, 0.5});
  CHECK(adj.measure == doctest::Approx(1.0));
  CHECK(!adj.tied);
  const auto c = circle_curve(2);
  const auto arc = shorter_subarc_by_length(c, {0, 0.1}, {0, 0.4});
  CHECK(arc.measure == doctest::Approx(0.3 * kPi * 2));
}

TEST_CASE("containment examples and re-indexing") {
  const auto sq = regular_ngon(4, 1);
  CHECK(contains(sq, {0.5, 0.5}) == Side::inside);
  CHECK(contains(sq, {2, 2}) == Side::outside);
  CHECK(contains(sq, {1, 0.5}) == Side::on_boundary);
  const auto sf = rohde_snowflake({6, 0.3, 2, ChoiceRule::seeded, 5});
  const auto rot = sf.rotated(17);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 2.5);
  for (int k = 0; k < 200; ++k) {
    const Point2 p{u(rng), u(rng)};
    CHECK(contains(sf, p) == contains(rot, p));
  }
}

TEST_CASE("subarc properties on random pairs") {
  const auto sf = rohde_snowflake({5, 0.3, 2, ChoiceRule::alternating, 1});
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, sf.length());
  for (int k = 0; k < 50; ++k) {
    const auto x = sf.at_arclength(u(rng));
    const auto y = sf.at_arclength(u(rng));
    if (x == y) continue;
    const auto ch = subarc_smaller_diameter(sf, x, y);
    CHECK(subarc_diameter(sf, ch.arc) <= subarc_diameter(sf, complement(ch.arc)) + sf.tolerance());
    const Subarc f{x, y, SubarcDirection::forward};
    CHECK(subarc_length(sf, f) + subarc_length(sf, complement(f)) == doctest::Approx(sf.length()));
  }
}
