#include <doctest.h>

#include <cmath>
#include <random>

#include "segskel/gabriel.hpp"
#include "segskel/oracle.hpp"
#include "segskel/polyroot.hpp"

#include "support/scenes.hpp"

using namespace segskel;
using namespace segskel::testsupport;

namespace {

GabrielFrame random_frame(std::mt19937& rng, double min_angle = 0.25) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  std::uniform_real_distribution<double> cut(min_angle, kPi - min_angle);
  for (;;) {
    const Point o{c(rng), c(rng)};
    const double a1 = ang(rng);
    const double a2 = a1 + cut(rng);
    const Point d1{std::cos(a1), std::sin(a1)};
    const Point d2{std::cos(a2), std::sin(a2)};
    const Segment s1{o + 0.3 * d1, o + 1.4 * d1};
    const Segment s2{o + 0.4 * d2, o + 1.2 * d2};
    const GabrielFrame f = make_frame(s1, s2);
    if (!f.parallel_case) return f;
  }
}

}  // namespace

TEST_CASE("midpoint_region shapes") {
  const MidpointRegion par = midpoint_region({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}});
  CHECK(par.kind == MidpointRegion::Kind::segment);
  REQUIRE(par.vertices.size() == 2);
  CHECK(par.vertices[0].y == doctest::Approx(1.0));
  CHECK(par.vertices[1].y == doctest::Approx(1.0));
  CHECK(std::min(par.vertices[0].x, par.vertices[1].x) == doctest::Approx(0.0));
  CHECK(std::max(par.vertices[0].x, par.vertices[1].x) == doctest::Approx(1.0));

  const MidpointRegion quad = midpoint_region({{0, 0}, {1, 0}}, {{0, 1}, {0, 2}});
  CHECK(quad.kind == MidpointRegion::Kind::quadrilateral);
  REQUIRE(quad.vertices.size() == 4);
  CHECK(quad.vertices[0].x == doctest::Approx(0.0));
  CHECK(quad.vertices[0].y == doctest::Approx(0.5));
  CHECK(quad.vertices[1].x == doctest::Approx(0.5));
  CHECK(quad.vertices[1].y == doctest::Approx(0.5));
  CHECK(quad.vertices[2].x == doctest::Approx(0.5));
  CHECK(quad.vertices[2].y == doctest::Approx(1.0));
  CHECK(quad.vertices[3].x == doctest::Approx(0.0));
  CHECK(quad.vertices[3].y == doctest::Approx(1.0));

  const MidpointRegion pt = midpoint_region({{0, 0}, {0, 0}}, {{2, 2}, {2, 2}});
  CHECK(pt.kind == MidpointRegion::Kind::point);
  REQUIRE(pt.vertices.size() == 1);
  CHECK(pt.vertices[0].x == doctest::Approx(1.0));
}

TEST_CASE("midpoint map is affine in the parameters") {
  std::mt19937 rng(307);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  const Segment s1{{0.1, -0.3}, {1.2, 0.4}};
  const Segment s2{{-0.5, 1.0}, {0.8, 1.7}};
  for (int k = 0; k < 200; ++k) {
    const double t1 = t(rng), t2 = t(rng);
    const Point m = 0.5 * (param_point(s1, t1) + param_point(s2, t2));
    // affine reconstruction from the corner midpoints
    const Point m00 = 0.5 * (s1.a + s2.a);
    const Point m10 = 0.5 * (s1.b + s2.a);
    const Point m01 = 0.5 * (s1.a + s2.b);
    const Point rebuilt = m00 + t1 * (m10 - m00) + t2 * (m01 - m00);
    CHECK(dist(m, rebuilt) < 1e-12);
  }
}

TEST_CASE("frame construction") {
  const Segment s1{{-2, 0}, {-1, 0}};
  const Segment s2{{0.5, 0.5}, {1, 1}};
  const GabrielFrame f = make_frame(s1, s2);
  CHECK(!f.parallel_case);
  // origin at the line intersection (0,0), s1 on the negative x axis
  const Point fa = f.to_frame(s1.a);
  const Point fb = f.to_frame(s1.b);
  CHECK(std::abs(fa.y) < 1e-12);
  CHECK(std::abs(fb.y) < 1e-12);
  CHECK(fa.x < 0.0);
  CHECK(fb.x < 0.0);
  CHECK(f.dir2.y > 0.0);
  // rigid motion: distances preserved
  CHECK(dist(f.to_frame({3, 4}), f.to_frame({-1, 2})) == doctest::Approx(dist({3, 4}, {-1, 2})));
  // round trip
  const Point p{0.37, -1.21};
  CHECK(dist(f.from_frame(f.to_frame(p)), p) < 1e-12);

  const GabrielFrame par = make_frame({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}});
  CHECK(par.parallel_case);
  CHECK_THROWS_AS(ellipse_residual(par, 1.0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(curve_case_coeffs(par, {{0, 1}, {1, 1}}, 0.5, CurveTarget::interior),
                  std::invalid_argument);
}

TEST_CASE("ellipse residual: perpendicular lines give the circle locus") {
  const GabrielFrame f = make_frame({{-2, 0}, {-1, 0}}, {{0, 0.5}, {0, 1.5}});
  CHECK(std::abs(f.dir2.x) < 1e-12);
  std::mt19937 rng(311);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  const double r = 0.8;
  for (int k = 0; k < 100; ++k) {
    const double a = ang(rng);
    // sliding ladder between the axes: midpoint traces the circle of radius r
    const Point v1{-2.0 * r * std::cos(a), 0.0};
    const Point v2{0.0, 2.0 * r * std::sin(a)};
    const Point mid = f.from_frame(0.5 * (f.to_frame(v1) + f.to_frame(v2)));
    CHECK(std::abs(ellipse_residual(f, r, mid)) < 1e-9);
  }
}

TEST_CASE("ellipse residual vanishes exactly on constructed sliding midpoints") {
  std::mt19937 rng(313);
  std::uniform_real_distribution<double> rr(0.1, 1.5);
  std::uniform_real_distribution<double> uu(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const GabrielFrame f = random_frame(rng);
    const double r = rr(rng);
    const double y1 = f.dir2.y;
    const double u = uu(rng) * 2.0 * r / y1;
    const double disc = 4.0 * r * r - u * u * y1 * y1;
    if (disc < 1e-8) continue;
    const double sq = std::sqrt(disc);
    for (double sign : {-1.0, 1.0}) {
      const Point v2f = u * f.dir2;
      const Point v1f{u * f.dir2.x + sign * sq, 0.0};
      const Point mid = 0.5 * (v1f + v2f);
      CHECK(dist(v1f, v2f) == doctest::Approx(2.0 * r).epsilon(1e-9));
      CHECK(std::abs(ellipse_residual(f, r, f.from_frame(mid))) < 1e-9);
    }
  }
}

TEST_CASE("ellipse residual at r = 0 vanishes only at the origin") {
  std::mt19937 rng(317);
  const GabrielFrame f = random_frame(rng);
  CHECK(std::abs(ellipse_residual(f, 0.0, f.from_frame({0, 0}))) < 1e-12);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int k = 0; k < 500; ++k) {
    const Point p{c(rng), c(rng)};
    if (norm(p) < 1e-3) continue;
    CHECK(ellipse_residual(f, 0.0, f.from_frame(p)) > 0.0);
  }
}

TEST_CASE("line-case curve roots back-substitute") {
  std::mt19937 rng(331);
  std::uniform_real_distribution<double> rr(0.2, 1.2);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  int roots_checked = 0;
  for (int k = 0; k < 500; ++k) {
    const GabrielFrame f = random_frame(rng);
    const double r = rr(rng);
    const Segment s{f.from_frame({c(rng), c(rng)}), f.from_frame({c(rng), c(rng)})};
    if (s.length() < 0.3) continue;
    const GabrielCurves curves = curve_case_coeffs(f, s, r, CurveTarget::interior);
    for (double t : quadratic_roots(curves.A, curves.B, curves.C - r * r)) {
      const Point pf = curves.line_base + t * curves.line_dir;
      const Point p = f.from_frame(pf);
      CHECK(std::abs(ellipse_residual(f, r, p)) < 1e-7);
      CHECK(std::abs(dist_point_line(p, s) - r) < 1e-7);
      ++roots_checked;
    }
  }
  CHECK(roots_checked > 100);
}

TEST_CASE("endpoint-case quartic roots back-substitute") {
  std::mt19937 rng(337);
  std::uniform_real_distribution<double> rr(0.2, 1.2);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  int roots_checked = 0;
  for (int k = 0; k < 500; ++k) {
    const GabrielFrame f = random_frame(rng);
    const double r = rr(rng);
    const Segment s{f.from_frame({c(rng), c(rng)}), f.from_frame({c(rng), c(rng)})};
    if (s.length() < 0.3) continue;
    for (CurveTarget target : {CurveTarget::endpoint1, CurveTarget::endpoint2}) {
      const GabrielCurves curves = curve_case_coeffs(f, s, r, target);
      const std::vector<double> M(curves.M.begin(), curves.M.end());
      for (double y : real_roots(M)) {
        const double den = curves.N[3] * y + curves.N[4];
        if (std::abs(den) < 1e-6) continue;
        const double x = ((curves.N[0] * y + curves.N[1]) * y + curves.N[2]) / den;
        const Point p = f.from_frame({x, y});
        const Point e = f.from_frame(curves.endpoint);
        CHECK(std::abs(ellipse_residual(f, r, p)) < 1e-7);
        CHECK(std::abs(dist(p, e) - r) < 1e-7);
        ++roots_checked;
      }
    }
  }
  CHECK(roots_checked > 100);
}

TEST_CASE("no curve crossings for a far parallel blocker") {
  const GabrielFrame f = make_frame({{-2, 0}, {-1, 0}}, {{0.4, 0.4}, {1, 1}});
  // blocker parallel to the first line, far above everything
  const Segment s{{-3, 50}, {3, 50}};
  const double r = 0.5;
  const GabrielCurves curves = curve_case_coeffs(f, s, r, CurveTarget::interior);
  CHECK(quadratic_roots(curves.A, curves.B, curves.C - r * r).empty());
}

TEST_CASE("gg_edge_exists basics") {
  SegmentSet two;
  two.sites = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
  const auto w = gg_edge_exists(two, 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->witness.t1 == 0.5);
  CHECK(w->r == doctest::Approx(0.5));
  CHECK(w->p.y == doctest::Approx(0.5));

  CHECK(!gg_edge_exists(e1_fixture(), 0, 2).has_value());

  const SegmentSet quad = quad_fixture();
  CHECK(gg_edge_exists(quad, 0, 1).has_value());
  CHECK(!gg_edge_exists(quad, 1, 3).has_value());  // blocked diagonal
}

TEST_CASE("gg_graph equals the beta = 1 skeletons") {
  std::mt19937 rng(347);
  const SkeletonGraph e1 = gg_graph(e1_fixture());
  CHECK(e1.edge_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  const SkeletonGraph quad = gg_graph(quad_fixture());
  CHECK(quad.edge_pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  for (int trial = 0; trial < 5; ++trial) {
    const SegmentSet S = random_scene(rng, 5);
    const SkeletonGraph gg = gg_graph(S);
    const SkeletonGraph lune = beta_skeleton(S, {1.0, Variant::lune, Closure::closed});
    const SkeletonGraph circ = beta_skeleton(S, {1.0, Variant::circle, Closure::closed});
    CHECK(same_edge_set(gg, lune));
    CHECK(same_edge_set(gg, circ));
    // identical witnesses too: the searches are the same
    for (size_t k = 0; k < gg.edges.size(); ++k) {
      CHECK(gg.edges[k].witness->t1 == lune.edges[k].witness->t1);
      CHECK(gg.edges[k].witness->t2 == lune.edges[k].witness->t2);
    }
  }
}

TEST_CASE("gg witnesses clear every blocker by a positive margin") {
  std::mt19937 rng(349);
  for (int trial = 0; trial < 5; ++trial) {
    const SegmentSet S = random_scene(rng, 6);
    const SkeletonGraph gg = gg_graph(S);
    for (const auto& e : gg.edges) {
      const auto w = gg_edge_exists(S, e.i, e.j);
      REQUIRE(w.has_value());
      for (int k = 0; k < S.size(); ++k) {
        if (k == e.i || k == e.j) continue;
        CHECK(dist_point_segment(w->p, S.sites[k]) - w->r > 0.0);
      }
    }
  }
}
