#include <doctest.h>

#include <random>

#include "segskel/geom.hpp"

using namespace segskel;

TEST_CASE("param_point interpolates and hits endpoints exactly") {
  const Segment s{{0, 0}, {2, 0}};
  const Point p = param_point(s, 0.25);
  CHECK(p.x == doctest::Approx(0.5));
  CHECK(p.y == 0.0);

  const Segment t{{0, 0}, {1, 2}};
  const Point m = param_point(t, 0.5);
  CHECK(m.x == doctest::Approx(0.5));
  CHECK(m.y == doctest::Approx(1.0));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> c(-5.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    const Segment r{{c(rng), c(rng)}, {c(rng), c(rng)}};
    CHECK(param_point(r, 0.0).x == r.a.x);
    CHECK(param_point(r, 0.0).y == r.a.y);
    CHECK(param_point(r, 1.0).x == r.b.x);
    CHECK(param_point(r, 1.0).y == r.b.y);
  }
}

TEST_CASE("angle_at basics") {
  CHECK(angle_at({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(angle_at({0, 0}, {1, 0}, {2, 0}) == doctest::Approx(0.0));
  CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}) == doctest::Approx(kPi));
  CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("angle_at is symmetric and scale invariant") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_real_distribution<double> sc(0.1, 10.0);
  for (int k = 0; k < 500; ++k) {
    const Point v{c(rng), c(rng)}, a{c(rng), c(rng)}, b{c(rng), c(rng)};
    if (dist(v, a) < 1e-3 || dist(v, b) < 1e-3) continue;
    const double ang = angle_at(v, a, b);
    CHECK(ang == doctest::Approx(angle_at(v, b, a)).epsilon(1e-12));
    const double s = sc(rng);
    CHECK(ang ==
          doctest::Approx(angle_at(v, v + s * (a - v), v + s * (b - v))).epsilon(1e-9));
    CHECK(ang >= 0.0);
    CHECK(ang <= kPi);
  }
}

TEST_CASE("homothety_segment examples and round trip") {
  const Segment s = homothety_segment({0, 0}, 0.5, {{2, 0}, {2, 2}});
  CHECK(s.a.x == doctest::Approx(1.0));
  CHECK(s.a.y == doctest::Approx(0.0));
  CHECK(s.b.x == doctest::Approx(1.0));
  CHECK(s.b.y == doctest::Approx(1.0));

  const Segment id = homothety_segment({3, 4}, 1.0, {{1, 2}, {5, 6}});
  CHECK(id.a.x == doctest::Approx(1.0));
  CHECK(id.b.y == doctest::Approx(6.0));

  const Segment t = homothety_segment({1, 1}, 2.0, {{1, 1}, {2, 1}});
  CHECK(t.a.x == doctest::Approx(1.0));
  CHECK(t.b.x == doctest::Approx(3.0));

  CHECK_THROWS_AS(homothety_segment({0, 0}, 0.0, {{0, 0}, {1, 0}}), std::invalid_argument);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  std::uniform_real_distribution<double> ratio(0.05, 20.0);
  for (int k = 0; k < 300; ++k) {
    const Point center{c(rng), c(rng)};
    const Segment orig{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const double r = ratio(rng);
    const Segment back = homothety_segment(center, 1.0 / r, homothety_segment(center, r, orig));
    CHECK(dist(back.a, orig.a) < 1e-12);
    CHECK(dist(back.b, orig.b) < 1e-12);
  }
}

TEST_CASE("dist_point_segment covers interior, endpoint, and on-segment cases") {
  const Segment s{{0, 0}, {2, 0}};
  CHECK(dist_point_segment({0, 1}, s) == doctest::Approx(1.0));
  CHECK(dist_point_segment({3, 0}, s) == doctest::Approx(1.0));
  CHECK(dist_point_segment({1, 0}, s) == doctest::Approx(0.0));

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    const Segment r{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (r.length() < 1e-6) continue;
    CHECK(dist_point_segment(param_point(r, t(rng)), r) < kGeomTol);
    const Point off = param_point(r, t(rng)) + 0.01 * perp(normalized(r.dir()));
    CHECK(dist_point_segment(off, r) > kGeomTol);
  }
}

TEST_CASE("validate_general_position") {
  SegmentSet ok;
  ok.sites = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}};
  CHECK(!validate_general_position(ok));

  SegmentSet crossing;
  crossing.sites = {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
  const auto v = validate_general_position(crossing);
  REQUIRE(v.has_value());
  CHECK(v->kind == ViolationKind::crossing);
  CHECK(v->i == 0);
  CHECK(v->j == 1);

  SegmentSet collinear;
  collinear.sites = {{{0, 0}, {0.5, 3}}, {{1, 0}, {1.5, 3}}, {{2, 0}, {2.5, 3}}};
  const auto c = validate_general_position(collinear);
  REQUIRE(c.has_value());
  CHECK(c->kind == ViolationKind::collinear_endpoints);

  SegmentSet degenerate;
  degenerate.sites = {{{0, 0}, {0, 0}}};
  CHECK(validate_general_position(degenerate).has_value());
  degenerate.allow_degenerate = true;
  CHECK(!validate_general_position(degenerate));
}
