#pragma once

#include <array>
#include <optional>
#include <vector>

#include "segskel/geom.hpp"
#include "segskel/solver.hpp"

namespace segskel {

/// Set of midpoints of segments with one end on each site: a parallelogram
/// in general, a segment for parallel sites, a point when both degenerate.
struct MidpointRegion {
  enum class Kind { quadrilateral, segment, point } kind = Kind::quadrilateral;
  std::vector<Point> vertices;  // 4 (cyclic), 2, or 1
};

MidpointRegion midpoint_region(const Segment& s1, const Segment& s2, double tol = kGeomTol);

/// Rigid frame with the intersection of the two supporting lines at the
/// origin, the first site on the negative x-axis, and the second line's
/// direction normalized to the upper half plane.
struct GabrielFrame {
  Point origin;
  double cos_r = 1.0, sin_r = 0.0;  // world -> frame rotation
  Point dir2{0.0, 1.0};             // unit direction of P(s2) in frame, y >= 0
  bool parallel_case = false;

  Point to_frame(const Point& p) const {
    const Point d = p - origin;
    return {cos_r * d.x - sin_r * d.y, sin_r * d.x + cos_r * d.y};
  }
  Point from_frame(const Point& p) const {
    return origin + Point{cos_r * p.x + sin_r * p.y, -sin_r * p.x + cos_r * p.y};
  }
};

GabrielFrame make_frame(const Segment& s1, const Segment& s2, double tol = kGeomTol);

/// Signed residual of the sliding-midpoint ellipse
///   x^2 + y^2 (1 + 4 k^2) - 4 k x y - r^2,   k = dir2.x / dir2.y,
/// evaluated at p (world coordinates, converted into the frame). Zero iff p
/// is the midpoint of some length-2r segment with ends on the two lines.
double ellipse_residual(const GabrielFrame& frame, double r, const Point& p);

enum class CurveTarget { interior, endpoint1, endpoint2 };

/// Clearance-curve coefficients at radius r against a blocker s:
///  - interior: the offset line L(s,r) meets the ellipse where
///    A t^2 + B t + C = r^2 (t parametrizes L by s's direction);
///  - endpoint: the circle of radius r about an endpoint of s meets the
///    ellipse where x = (N1 y^2 + N2 y + N3)/(N4 y + N5) and
///    M1 y^4 + M2 y^3 + M3 y^2 + M4 y + M5 = 0.
struct GabrielCurves {
  double A = 0, B = 0, C = 0;
  std::array<double, 5> N{0, 0, 0, 0, 0};
  std::array<double, 5> M{0, 0, 0, 0, 0};
  double r = 0;
  CurveTarget target = CurveTarget::interior;
  Point line_base;     // frame coords; L(s,r) = line_base + t * line_dir
  Point line_dir;
  Point endpoint;      // frame coords of the targeted endpoint
};

GabrielCurves curve_case_coeffs(const GabrielFrame& frame, const Segment& s, double r,
                                CurveTarget target, double tol = kGeomTol);

struct GabrielWitness {
  Point p;        // disc center (midpoint of the generator pair)
  double r = 0;   // disc radius, half the generator distance
  GeneratorPair witness;
};

/// Feasibility search for an empty diameter disc between sites i and j,
/// using the solver's subdivision engine at the closed beta = 1 spec.
std::optional<GabrielWitness> gg_edge_exists(const SegmentSet& S, int i, int j,
                                             double epsilon = kDefaultEpsilon);

/// Gabriel graph; equals beta_skeleton at beta = 1 edge for edge.
SkeletonGraph gg_graph(const SegmentSet& S, double epsilon = kDefaultEpsilon,
                       const SkeletonGraph* dt = nullptr);

}  // namespace segskel
