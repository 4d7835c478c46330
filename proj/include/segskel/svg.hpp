#pragma once

#include <optional>
#include <string>

#include "segskel/geom.hpp"
#include "segskel/neighborhood.hpp"
#include "segskel/solver.hpp"

namespace segskel {

/// Static SVG 1.1 rendering: sites in black, skeleton edges in blue drawn
/// between the witness generators, and one gray witness-neighborhood outline
/// per edge (when a spec is given and the edge carries a witness).
void write_svg(const std::string& path, const SegmentSet& S, const SkeletonGraph& g,
               const std::optional<BetaSpec>& spec);

}  // namespace segskel
