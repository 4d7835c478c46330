#include <doctest.h>

#include <cmath>
#include <random>

#include "segskel/oracle.hpp"
#include "segskel/solver.hpp"

#include "support/scenes.hpp"

using namespace segskel;
using namespace segskel::testsupport;

TEST_CASE("oracle_edge on fixtures") {
  const SegmentSet S = e1_fixture();
  CHECK(!oracle_edge(S, 0, 2, make_beta_spec(1.0, Variant::lune), {64, 0}));
  CHECK(oracle_edge(S, 0, 1, make_beta_spec(1.0, Variant::lune), {64, 0}));

  SegmentSet two;
  two.sites = {S.sites[0], S.sites[2]};
  CHECK(oracle_edge(two, 0, 1, make_beta_spec(1.0, Variant::lune), {16, 0}));
}

TEST_CASE("point skeleton oracle on the unit square") {
  const std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const std::vector<std::pair<int, int>> sides = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};

  // open 2-skeleton: four sides, diagonals blocked strictly
  const SkeletonGraph rng_graph = point_skeleton_oracle(square, {2.0, Variant::lune, Closure::open});
  CHECK(rng_graph.edge_pairs() == sides);

  // closed 1-skeleton: diagonals blocked by corners exactly on the boundary
  const SkeletonGraph gg_graph = point_skeleton_oracle(square, {1.0, Variant::lune, Closure::closed});
  CHECK(gg_graph.edge_pairs() == sides);

  // open 1-skeleton admits the boundary corners, so diagonals appear
  const SkeletonGraph open1 = point_skeleton_oracle(square, {1.0, Variant::lune, Closure::open});
  CHECK(open1.edges.size() == 6);

  const SkeletonGraph pair = point_skeleton_oracle({{0, 0}, {1, 1}}, make_beta_spec(1.0, Variant::lune));
  CHECK(pair.edges.size() == 1);

  CHECK_THROWS_AS(point_skeleton_oracle({{0, 0}, {0, 0}}, make_beta_spec(1.0, Variant::lune)),
                  std::invalid_argument);
}

TEST_CASE("oracle is invariant under reordering and similarity") {
  std::mt19937 rng(401);
  const SegmentSet S = random_scene(rng, 5);
  const BetaSpec spec = make_beta_spec(1.0, Variant::lune);
  const OracleConfig cfg{48, 0};

  SkeletonGraph base;
  base.n = S.size();
  for (int i = 0; i < S.size(); ++i)
    for (int j = i + 1; j < S.size(); ++j)
      if (oracle_edge(S, i, j, spec, cfg)) base.add_edge({i, j, std::nullopt});

  // similarity transform
  SegmentSet T = S;
  const double a = 0.83, s = 2.7;
  for (Segment& seg : T.sites)
    for (Point* p : {&seg.a, &seg.b})
      *p = Point{s * (std::cos(a) * p->x - std::sin(a) * p->y) + 3.0,
                 s * (std::sin(a) * p->x + std::cos(a) * p->y) - 1.0};
  for (int i = 0; i < S.size(); ++i)
    for (int j = i + 1; j < S.size(); ++j)
      CHECK(oracle_edge(T, i, j, spec, cfg) == base.has_edge(i, j));

  // reversal of site order
  SegmentSet R;
  for (int i = S.size() - 1; i >= 0; --i) R.sites.push_back(S.sites[i]);
  for (int i = 0; i < S.size(); ++i)
    for (int j = i + 1; j < S.size(); ++j)
      CHECK(oracle_edge(R, i, j, spec, cfg) ==
            base.has_edge(S.size() - 1 - i, S.size() - 1 - j));
}

TEST_CASE("degenerate segments match the point oracle") {
  std::mt19937 rng(409);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto pts = random_points(rng, n);
    const SegmentSet S = degenerate_scene(pts, rng);
    for (double beta : {0.5, 1.0, 2.0}) {
      const BetaSpec spec = make_beta_spec(beta, Variant::lune);
      const SkeletonGraph expect = point_skeleton_oracle(pts, spec);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          CHECK(oracle_edge(S, i, j, spec, {32, 0}) == expect.has_edge(i, j));
    }
  }
}
