#include "segskel/solver.hpp"

#include <algorithm>
#include <cmath>

#include "segskel/delaunay.hpp"

namespace segskel {

bool SkeletonGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges)
    if (e.i == i && e.j == j) return true;
  return false;
}

std::vector<std::pair<int, int>> SkeletonGraph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.i, e.j);
  return out;
}

void SkeletonGraph::add_edge(SkeletonEdge e) {
  if (e.i > e.j) std::swap(e.i, e.j);
  edges.push_back(std::move(e));
}

void SkeletonGraph::sort_edges() {
  std::sort(edges.begin(), edges.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
}

bool same_edge_set(const SkeletonGraph& a, const SkeletonGraph& b) {
  auto pa = a.edge_pairs();
  auto pb = b.edge_pairs();
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

std::vector<std::pair<int, int>> candidate_pairs(const SegmentSet& S, const BetaSpec& spec,
                                                 const SkeletonGraph* dt) {
  const int n = S.size();
  std::vector<std::pair<int, int>> out;
  if (spec.beta >= 1.0) {
    SkeletonGraph computed;
    if (!dt) {
      computed = delaunay_graph(S, kDefaultDtResolution);
      dt = &computed;
    }
    out = dt->edge_pairs();
    std::sort(out.begin(), out.end());
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

/// Lipschitz constants of the neighborhood's disc centers and radii with
/// respect to the total generator displacement d1 + d2.
struct NbhdLipschitz {
  double center;
  double radius;
};

NbhdLipschitz nbhd_lipschitz(const BetaSpec& spec) {
  const double beta = spec.beta;
  if (beta == 1.0) return {0.5, 0.5};
  if (beta > 1.0 && spec.variant == Variant::lune) return {beta / 2.0, beta / 2.0};
  const double gamma = beta < 1.0 ? 1.0 / (2.0 * beta) : beta / 2.0;
  const double kappa = std::sqrt(std::max(0.0, gamma * gamma - 0.25));
  return {0.5 + kappa, gamma};
}

/// True when some point of blocker stays inside the region over every
/// generator pair of the cell: there must be a point whose distance margin
/// to each required disc at the cell center exceeds the worst-case disc
/// drift plus the closure tolerance band.
bool blocker_covers_cell(const Neighborhood& N, const Segment& blocker, double shrink,
                         double tol) {
  const double off = -(shrink + 2.0 * tol);
  if (N.combine == Combine::single)
    return disc_segment_interval(N.discs[0], blocker, off, tol).has_value();
  if (N.combine == Combine::unite)
    return disc_segment_interval(N.discs[0], blocker, off, tol).has_value() ||
           disc_segment_interval(N.discs[1], blocker, off, tol).has_value();
  const auto i0 = disc_segment_interval(N.discs[0], blocker, off, tol);
  if (!i0) return false;
  const auto i1 = disc_segment_interval(N.discs[1], blocker, off, tol);
  if (!i1) return false;
  return std::max(i0->first, i1->first) <= std::min(i0->second, i1->second);
}

}  // namespace

std::optional<GeneratorPair> find_witness(const SegmentSet& S, int i, int j,
                                          const BetaSpec& spec, double epsilon) {
  if (i == j) throw std::invalid_argument("find_witness: i and j must differ");
  const Segment& si = S.sites[i];
  const Segment& sj = S.sites[j];

  std::vector<int> blockers;
  for (int k = 0; k < S.size(); ++k)
    if (k != i && k != j) blockers.push_back(k);

  auto free_at = [&](double t1, double t2) {
    const Neighborhood N =
        make_neighborhood(param_point(si, t1), param_point(sj, t2), spec, S.tol);
    for (int k : blockers)
      if (segment_intersects_nbhd(N, S.sites[k], S.tol)) return false;
    return true;
  };

  const NbhdLipschitz lip = nbhd_lipschitz(spec);
  const double len_i = si.length();
  const double len_j = sj.length();

  auto prune = [&](const FreeRegionCell& cell) {
    const double tc1 = 0.5 * (cell.t1_lo + cell.t1_hi);
    const double tc2 = 0.5 * (cell.t2_lo + cell.t2_hi);
    // Max generator displacement anywhere in the cell from its center.
    const double drift = 0.5 * (len_i * (cell.t1_hi - cell.t1_lo) +
                                len_j * (cell.t2_hi - cell.t2_lo));
    const double shrink = (lip.center + lip.radius) * drift;
    const Neighborhood N =
        make_neighborhood(param_point(si, tc1), param_point(sj, tc2), spec, S.tol);

    const Point corners1[2] = {param_point(si, cell.t1_lo), param_point(si, cell.t1_hi)};
    const Point corners2[2] = {param_point(sj, cell.t2_lo), param_point(sj, cell.t2_hi)};

    for (int k : blockers) {
      const Segment& b = S.sites[k];
      if (!blocker_covers_cell(N, b, shrink, S.tol)) continue;
      // Require the same blocker at all four corner samples before pruning.
      bool corners_blocked = true;
      for (const Point& g1 : corners1) {
        for (const Point& g2 : corners2) {
          const Neighborhood Nc = make_neighborhood(g1, g2, spec, S.tol);
          if (!segment_intersects_nbhd(Nc, b, S.tol)) {
            corners_blocked = false;
            break;
          }
        }
        if (!corners_blocked) break;
      }
      if (corners_blocked) return true;
    }
    return false;
  };

  return detail::subdivision_search(epsilon, free_at, prune);
}

SkeletonGraph beta_skeleton(const SegmentSet& S, const BetaSpec& spec, double epsilon,
                            const SkeletonGraph* dt) {
  const auto violation = validate_general_position(S);
  if (violation && violation->kind != ViolationKind::collinear_endpoints)
    throw std::invalid_argument("beta_skeleton: " + violation->message);

  SkeletonGraph g;
  g.n = S.size();
  for (const auto& [i, j] : candidate_pairs(S, spec, dt)) {
    if (auto w = find_witness(S, i, j, spec, epsilon)) g.add_edge({i, j, w});
  }
  g.sort_edges();
  return g;
}

}  // namespace segskel
