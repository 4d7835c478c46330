#include "segskel/oracle.hpp"

#include <stdexcept>
#include <string>

namespace segskel {

bool oracle_edge(const SegmentSet& S, int i, int j, const BetaSpec& spec,
                 const OracleConfig& cfg) {
  if (i == j) throw std::invalid_argument("oracle_edge: i and j must differ");
  const Segment& si = S.sites[i];
  const Segment& sj = S.sites[j];
  const int g = cfg.grid;

  for (int a = 0; a <= g; ++a) {
    const double t1 = static_cast<double>(a) / g;
    const Point v1 = param_point(si, t1);
    for (int b = 0; b <= g; ++b) {
      const double t2 = static_cast<double>(b) / g;
      const Neighborhood N = make_neighborhood(v1, param_point(sj, t2), spec, S.tol);
      bool free = true;
      for (int k = 0; k < S.size(); ++k) {
        if (k == i || k == j) continue;
        if (segment_intersects_nbhd(N, S.sites[k], S.tol)) {
          free = false;
          break;
        }
      }
      if (free) return true;
    }
  }
  return false;
}

SkeletonGraph oracle_skeleton(const SegmentSet& S, const BetaSpec& spec,
                              const OracleConfig& cfg) {
  SkeletonGraph g;
  g.n = S.size();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (oracle_edge(S, i, j, spec, cfg)) g.add_edge({i, j, std::nullopt});
  g.sort_edges();
  return g;
}

SkeletonGraph point_skeleton_oracle(const std::vector<Point>& V, const BetaSpec& spec,
                                    double tol) {
  const int n = static_cast<int>(V.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(V[i], V[j]) <= tol)
        throw std::invalid_argument("point_skeleton_oracle: duplicate points " +
                                    std::to_string(i) + ", " + std::to_string(j));

  SkeletonGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Neighborhood N = make_neighborhood(V[i], V[j], spec, tol);
      bool free = true;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (nbhd_contains(N, V[k], tol)) {
          free = false;
          break;
        }
      }
      if (free) g.add_edge({i, j, std::nullopt});
    }
  g.sort_edges();
  return g;
}

}  // namespace segskel
