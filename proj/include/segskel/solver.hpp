#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "segskel/geom.hpp"
#include "segskel/neighborhood.hpp"
#include "segskel/subdivision.hpp"

namespace segskel {

inline constexpr double kDefaultEpsilon = 1.0 / 256.0;
inline constexpr int kDefaultDtResolution = 512;

struct SkeletonEdge {
  int i = 0;
  int j = 0;
  std::optional<GeneratorPair> witness;
};

/// Undirected graph over site indices; edges are kept sorted (i < j,
/// lexicographic), so equal edge sets compare equal.
struct SkeletonGraph {
  int n = 0;
  std::vector<SkeletonEdge> edges;

  bool has_edge(int i, int j) const;
  std::vector<std::pair<int, int>> edge_pairs() const;
  void add_edge(SkeletonEdge e);
  void sort_edges();
};

bool same_edge_set(const SkeletonGraph& a, const SkeletonGraph& b);

/// Pairs worth testing: every pair for beta < 1; exactly the Delaunay graph
/// edges for beta >= 1 (computed at default resolution when dt is null).
std::vector<std::pair<int, int>> candidate_pairs(const SegmentSet& S, const BetaSpec& spec,
                                                 const SkeletonGraph* dt = nullptr);

/// Searches [0,1]^2 for generator parameters whose neighborhood avoids every
/// site other than i and j. A returned witness is verified by the exact
/// predicate at that sample; absence is sound only down to cells of side
/// epsilon.
std::optional<GeneratorPair> find_witness(const SegmentSet& S, int i, int j,
                                          const BetaSpec& spec,
                                          double epsilon = kDefaultEpsilon);

/// Full skeleton: candidate pairs filtered by find_witness, witnesses
/// attached. Throws on disjointness violations of the input.
SkeletonGraph beta_skeleton(const SegmentSet& S, const BetaSpec& spec,
                            double epsilon = kDefaultEpsilon,
                            const SkeletonGraph* dt = nullptr);

}  // namespace segskel
