#pragma once

#include <vector>

#include "segskel/geom.hpp"
#include "segskel/solver.hpp"

namespace segskel {

/// Rasterized nearest-site labeling of a padded bounding box of the sites.
struct GridVoronoi {
  Point lo;
  Point hi;
  int resolution = 0;                // (resolution+1)^2 samples
  std::vector<int> labels;           // row-major, index = iy*(res+1)+ix
  std::vector<int> missing_sites;    // sites that own no sample

  Point sample(int ix, int iy) const {
    const double fx = static_cast<double>(ix) / resolution;
    const double fy = static_cast<double>(iy) / resolution;
    return {lo.x + (hi.x - lo.x) * fx, lo.y + (hi.y - lo.y) * fy};
  }
  int label(int ix, int iy) const { return labels[iy * (resolution + 1) + ix]; }
};

/// Labels every sample of the padded box with its nearest site (ties broken
/// by lowest index). resolution must be at least 16.
GridVoronoi grid_voronoi(const SegmentSet& S, int resolution);

/// Dual graph of the rasterized Voronoi diagram with a certified refinement:
/// an edge (i,j) is emitted only when labels i and j are 4-adjacent somewhere
/// AND a bisection along that sample pair yields a disc touching both sites
/// whose interior is empty of all other sites. Throws when the resolution is
/// too small to give some site any sample.
SkeletonGraph delaunay_graph(const SegmentSet& S, int resolution = 512);

}  // namespace segskel
