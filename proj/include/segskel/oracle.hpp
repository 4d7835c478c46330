#pragma once

#include <vector>

#include "segskel/geom.hpp"
#include "segskel/neighborhood.hpp"
#include "segskel/solver.hpp"

namespace segskel {

struct OracleConfig {
  int grid = 256;           // (grid+1)^2 samples over [0,1]^2
  int probe_density = 1000; // samples per segment for region cross-checks
};

/// Brute-force edge decision: scans the full generator grid and reports true
/// iff some sample's neighborhood avoids every blocker. Uses only the exact
/// clipping predicate; deliberately shares nothing with the solver's search.
bool oracle_edge(const SegmentSet& S, int i, int j, const BetaSpec& spec,
                 const OracleConfig& cfg = {});

/// All-pairs skeleton over the whole generator grid.
SkeletonGraph oracle_skeleton(const SegmentSet& S, const BetaSpec& spec,
                              const OracleConfig& cfg = {});

/// Literal all-pairs, all-blockers evaluation of the point neighborhood
/// definition. Throws on duplicate points.
SkeletonGraph point_skeleton_oracle(const std::vector<Point>& V, const BetaSpec& spec,
                                    double tol = kGeomTol);

}  // namespace segskel
