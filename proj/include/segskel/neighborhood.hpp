#pragma once

#include <optional>
#include <utility>

#include "segskel/geom.hpp"

namespace segskel {

enum class Variant { lune, circle };
enum class Closure { open, closed };

/// Closure convention when the caller does not pick one: closed for
/// beta <= 1 (Gabriel convention), open for beta > 1 (RNG convention).
inline Closure default_closure(double beta) {
  return beta <= 1.0 ? Closure::closed : Closure::open;
}

struct BetaSpec {
  double beta = 1.0;
  Variant variant = Variant::lune;
  Closure closure = Closure::closed;
};

inline BetaSpec make_beta_spec(double beta, Variant variant) {
  return BetaSpec{beta, variant, default_closure(beta)};
}

enum class Combine { single, intersect, unite };

/// One- or two-disc boolean region around a generator pair.
///
/// Disc order convention:
///  - single (beta = 1): discs[0] is the disc on diameter v1 v2;
///  - lune, beta > 1: discs[0] is the disc whose boundary passes through v1
///    (center (1-b/2)v1 + (b/2)v2) and discs[1] the one through v2;
///  - chord type (lune beta < 1, circle beta != 1): both circles pass through
///    v1 and v2; discs[0] has its center on the left of v1->v2.
struct Neighborhood {
  Combine combine = Combine::single;
  Disc discs[2];
  int disc_count = 1;
  Point v1, v2;
  BetaSpec spec;
};

/// Constant angle at which boundary points of the neighborhood see the
/// generator chord: pi/2 at beta = 1, pi - asin(beta) for the lune with
/// beta < 1, asin(1/beta) for the circle variant with beta > 1.
/// Throws for a variant/beta combination without a constant inscribed angle.
double delta_of_beta(const BetaSpec& spec);

Neighborhood make_neighborhood(const Point& v1, const Point& v2, const BetaSpec& spec,
                               double tol = kGeomTol);

bool nbhd_contains(const Neighborhood& N, const Point& p, double tol = kGeomTol);

/// Parameter interval of s (clipped to [0,1]) inside the disc inflated by
/// radius_offset; nullopt when the line misses the disc entirely.
std::optional<std::pair<double, double>> disc_segment_interval(const Disc& disc,
                                                               const Segment& s,
                                                               double radius_offset,
                                                               double tol = kGeomTol);

/// True iff some point of the closed segment s lies in N. Computed by
/// clipping s against each disc and combining the parameter intervals; no
/// sampling is involved.
bool segment_intersects_nbhd(const Neighborhood& N, const Segment& s, double tol = kGeomTol);

/// True iff some point of s lies in the single disc (with closure semantics).
bool segment_intersects_disc(const Disc& disc, const Segment& s, Closure closure,
                             double tol = kGeomTol);

}  // namespace segskel
