#include "segskel/gabriel.hpp"

#include <algorithm>
#include <cmath>

namespace segskel {

MidpointRegion midpoint_region(const Segment& s1, const Segment& s2, double tol) {
  const Point m00 = 0.5 * (s1.a + s2.a);
  const Point m10 = 0.5 * (s1.b + s2.a);
  const Point m11 = 0.5 * (s1.b + s2.b);
  const Point m01 = 0.5 * (s1.a + s2.b);

  MidpointRegion region;
  const bool deg1 = s1.length() <= tol;
  const bool deg2 = s2.length() <= tol;
  if (deg1 && deg2) {
    region.kind = MidpointRegion::Kind::point;
    region.vertices = {m00};
    return region;
  }
  const Point u1 = s1.dir();
  const Point u2 = s2.dir();
  const bool parallel = deg1 || deg2 ||
                        std::abs(cross(u1, u2)) <= tol * std::max(1.0, norm(u1) * norm(u2));
  if (parallel) {
    // The midpoint map is rank one; the image is a segment between the two
    // extreme corner midpoints along the common direction.
    const Point dir = deg1 ? u2 : u1;
    const Point corners[4] = {m00, m10, m11, m01};
    int lo = 0, hi = 0;
    for (int k = 1; k < 4; ++k) {
      if (dot(corners[k], dir) < dot(corners[lo], dir)) lo = k;
      if (dot(corners[k], dir) > dot(corners[hi], dir)) hi = k;
    }
    region.kind = MidpointRegion::Kind::segment;
    region.vertices = {corners[lo], corners[hi]};
    return region;
  }
  region.kind = MidpointRegion::Kind::quadrilateral;
  region.vertices = {m00, m10, m11, m01};
  return region;
}

GabrielFrame make_frame(const Segment& s1, const Segment& s2, double tol) {
  const Point u1 = s1.dir();
  const Point u2 = s2.dir();
  if (norm(u1) <= tol || norm(u2) <= tol)
    throw std::invalid_argument("make_frame: degenerate site");

  GabrielFrame f;
  const double cr = cross(u1, u2);
  if (std::abs(cr) <= tol * norm(u1) * norm(u2)) {
    f.parallel_case = true;
    f.origin = s1.a;
    const Point d = normalized(u1);
    f.cos_r = d.x;
    f.sin_r = -d.y;
    f.dir2 = {1.0, 0.0};
    return f;
  }

  const double t = cross(s2.a - s1.a, u2) / cr;
  f.origin = s1.a + t * u1;
  const Point d = normalized(u1);
  f.cos_r = d.x;
  f.sin_r = -d.y;
  // Put the first site on the negative x-axis.
  const Point mid1 = f.to_frame(param_point(s1, 0.5));
  if (mid1.x > 0.0) {
    f.cos_r = -f.cos_r;
    f.sin_r = -f.sin_r;
  }
  Point d2 = f.to_frame(s2.b) - f.to_frame(s2.a);
  d2 = normalized(d2);
  if (d2.y < 0.0) d2 = -d2;
  f.dir2 = d2;
  return f;
}

double ellipse_residual(const GabrielFrame& frame, double r, const Point& p) {
  if (frame.parallel_case)
    throw std::invalid_argument("ellipse_residual: undefined for parallel supporting lines");
  const Point q = frame.to_frame(p);
  const double k = frame.dir2.x / frame.dir2.y;
  return q.x * q.x + q.y * q.y * (1.0 + 4.0 * k * k) - 4.0 * k * q.x * q.y - r * r;
}

namespace {

// little polynomial helpers over fixed-size arrays (ascending degree)
std::array<double, 5> square_quad(const std::array<double, 3>& q) {
  // (q0 + q1 y + q2 y^2)^2
  return {q[0] * q[0], 2 * q[0] * q[1], q[1] * q[1] + 2 * q[0] * q[2], 2 * q[1] * q[2],
          q[2] * q[2]};
}

}  // namespace

GabrielCurves curve_case_coeffs(const GabrielFrame& frame, const Segment& s, double r,
                                CurveTarget target, double tol) {
  if (frame.parallel_case)
    throw std::invalid_argument("curve_case_coeffs: undefined for parallel supporting lines");
  if (!(r > 0.0)) throw std::invalid_argument("curve_case_coeffs: radius must be positive");

  const double k = frame.dir2.x / frame.dir2.y;
  GabrielCurves out;
  out.r = r;
  out.target = target;

  const Point fa = frame.to_frame(s.a);
  const Point fb = frame.to_frame(s.b);

  if (target == CurveTarget::interior) {
    const Point ds = fb - fa;
    if (norm(ds) <= tol)
      throw std::invalid_argument("curve_case_coeffs: degenerate blocker for interior case");
    const Point n = normalized(perp(ds));
    const double side = dot(n, fa) > 0.0 ? -1.0 : 1.0;  // offset toward the origin
    const Point base = fa + (side * r) * n;
    out.line_base = base;
    out.line_dir = ds;
    out.A = ds.x * ds.x + (1.0 + 4.0 * k * k) * ds.y * ds.y - 4.0 * k * ds.x * ds.y;
    out.B = 2.0 * base.x * ds.x + 2.0 * (1.0 + 4.0 * k * k) * base.y * ds.y -
            4.0 * k * (base.x * ds.y + base.y * ds.x);
    out.C = base.x * base.x + (1.0 + 4.0 * k * k) * base.y * base.y -
            4.0 * k * base.x * base.y;
    return out;
  }

  const Point e = target == CurveTarget::endpoint1 ? fa : fb;
  out.endpoint = e;
  // Subtracting the ellipse equation from the endpoint circle leaves a
  // relation linear in x: x = (N1 y^2 + N2 y + N3) / (N4 y + N5).
  out.N = {4.0 * k * k, 2.0 * e.y, -(e.x * e.x + e.y * e.y), 4.0 * k, -2.0 * e.x};

  // Substituting back into the circle and clearing the denominator gives the
  // quartic (ex Q - P)^2 + ((ey - y) Q)^2 - (r Q)^2 = 0.
  const std::array<double, 3> P{out.N[2], out.N[1], out.N[0]};   // ascending
  const std::array<double, 3> Q{out.N[4], out.N[3], 0.0};
  const std::array<double, 3> exQ_P{e.x * Q[0] - P[0], e.x * Q[1] - P[1], -P[2]};
  const std::array<double, 3> eyyQ{e.y * Q[0], e.y * Q[1] - Q[0], -Q[1]};  // (ey - y) * Q
  const auto t1 = square_quad(exQ_P);
  const auto t2 = square_quad(eyyQ);
  const auto q2 = square_quad(Q);
  std::array<double, 5> quart{};
  for (int i = 0; i < 5; ++i) quart[i] = t1[i] + t2[i] - r * r * q2[i];
  // store descending: M1 y^4 + ... + M5
  out.M = {quart[4], quart[3], quart[2], quart[1], quart[0]};
  return out;
}

std::optional<GabrielWitness> gg_edge_exists(const SegmentSet& S, int i, int j,
                                             double epsilon) {
  if (i == j) throw std::invalid_argument("gg_edge_exists: i and j must differ");
  const BetaSpec spec{1.0, Variant::lune, Closure::closed};
  const auto w = find_witness(S, i, j, spec, epsilon);
  if (!w) return std::nullopt;

  const Point v1 = param_point(S.sites[i], w->t1);
  const Point v2 = param_point(S.sites[j], w->t2);
  GabrielWitness out;
  out.p = 0.5 * (v1 + v2);
  out.r = 0.5 * dist(v1, v2);
  out.witness = *w;

  // Clearance margin re-verified with exact distances.
  for (int k = 0; k < S.size(); ++k) {
    if (k == i || k == j) continue;
    if (!(dist_point_segment(out.p, S.sites[k]) - out.r > 0.0))
      throw std::logic_error("gg_edge_exists: witness failed exact re-verification");
  }
  return out;
}

SkeletonGraph gg_graph(const SegmentSet& S, double epsilon, const SkeletonGraph* dt) {
  const auto violation = validate_general_position(S);
  if (violation && violation->kind != ViolationKind::collinear_endpoints)
    throw std::invalid_argument("gg_graph: " + violation->message);

  const BetaSpec spec{1.0, Variant::lune, Closure::closed};
  SkeletonGraph g;
  g.n = S.size();
  for (const auto& [i, j] : candidate_pairs(S, spec, dt)) {
    if (auto w = gg_edge_exists(S, i, j, epsilon)) g.add_edge({i, j, w->witness});
  }
  g.sort_edges();
  return g;
}

}  // namespace segskel
