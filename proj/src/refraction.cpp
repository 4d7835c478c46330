#include "segskel/refraction.hpp"

#include <algorithm>
#include <cmath>

#include "segskel/polyroot.hpp"

namespace segskel {

RefractionCoeffs refraction_coeffs(const Segment& s1, const Segment& s, const Segment& s2,
                                   double delta, Orientation orientation) {
  if (!(delta > 0.0 && delta < kPi))
    throw std::invalid_argument("refraction_coeffs: delta must lie in (0, pi)");
  if (s1.length() <= kGeomTol || s.length() <= kGeomTol || s2.length() <= kGeomTol)
    throw std::invalid_argument("refraction_coeffs: degenerate segment");

  const Point u1 = s1.dir(), u = s.dir(), u2 = s2.dir();
  const Point a1 = s1.a, a = s.a, a2 = s2.a;

  RefractionCoeffs c;
  c.delta = delta;
  c.orientation = orientation;

  c.A1 = u.x;
  c.B1 = -u1.x;
  c.C1 = a.x - a1.x;
  c.A2 = u.y;
  c.B2 = -u1.y;
  c.C2 = a.y - a1.y;

  // The outgoing direction must see the source at the vertex angle delta:
  // angle(q -> q1, q -> q2) = delta requires rotating the connecting vector
  // by pi - delta (cw orientation turns the other way).
  const double cd = -std::cos(delta);
  const double sd = orientation == Orientation::ccw ? std::sin(delta) : -std::sin(delta);

  c.D = cd * c.A1 - sd * c.A2;
  c.E = cd * c.B1 - sd * c.B2;
  c.F = cd * c.C1 - sd * c.C2;
  c.G = sd * c.A1 + cd * c.A2;
  c.H = sd * c.B1 + cd * c.B2;
  c.I = sd * c.C1 + cd * c.C2;

  c.J = -u.x;
  c.K = u2.x;
  c.L = a2.x - a.x;
  c.Jy = -u.y;
  c.Ky = u2.y;
  c.Ly = a2.y - a.y;

  // Cross-multiplying the x and y ray equations:
  //   t2 (u2y rx - u2x ry) = (t uy + ey) rx - (t ux + ex) ry,
  // with ex = ax - a2x, ey = ay - a2y.
  const double ex = a.x - a2.x;
  const double ey = a.y - a2.y;

  c.M = u.y * c.D - u.x * c.G;
  c.N = u2.y * c.D - u2.x * c.G;
  c.p1 = {0.0, u.y * c.E - u.x * c.H, u.y * c.F - u.x * c.I + ey * c.D - ex * c.G};
  c.p2 = {0.0, ey * c.E - ex * c.H, ey * c.F - ex * c.I};
  c.p3 = {0.0, u2.y * c.E - u2.x * c.H, u2.y * c.F - u2.x * c.I};
  return c;
}

namespace {

double denom_scale(const RefractionCoeffs& c, double p3v, double t) {
  return 1.0 + std::abs(c.N * t) + std::abs(p3v);
}

}  // namespace

std::optional<double> t2_unclipped(const RefractionCoeffs& c, double t1, double t) {
  const double p3v = eval_p(c.p3, t1);
  const double den = c.N * t + p3v;
  if (std::abs(den) <= 1e-12 * denom_scale(c, p3v, t)) return std::nullopt;
  const double num = (c.M * t + eval_p(c.p1, t1)) * t + eval_p(c.p2, t1);
  return num / den;
}

std::optional<double> t2_of(const RefractionCoeffs& c, double t1, double t) {
  const auto t2 = t2_unclipped(c, t1, t);
  if (!t2) return std::nullopt;

  const Point rvec{c.D * t + c.E * t1 + c.F, c.G * t + c.H * t1 + c.I};
  if (norm(rvec) <= kGeomTol) return std::nullopt;  // connecting vector degenerate

  // The refracted half-line must actually reach the intersection point:
  // z rx = K t2 + J t + L (and the y analogue), z >= 0 required.
  const double zx_num = c.K * *t2 + c.J * t + c.L;
  const double zy_num = c.Ky * *t2 + c.Jy * t + c.Ly;
  const double z = std::abs(rvec.x) >= std::abs(rvec.y) ? zx_num / rvec.x : zy_num / rvec.y;
  const double reach = std::hypot(zx_num, zy_num);  // |q2 - q| up to sign
  if (reach <= kGeomTol * (1.0 + std::abs(*t2))) return std::nullopt;
  if (z < 0.0) return std::nullopt;
  return t2;
}

std::vector<double> extreme_t(const RefractionCoeffs& c, double t1) {
  const double p1v = eval_p(c.p1, t1);
  const double p2v = eval_p(c.p2, t1);
  const double p3v = eval_p(c.p3, t1);

  const double qa = c.M * c.N;
  const double qb = 2.0 * c.M * p3v;
  const double qc = p1v * p3v - c.N * p2v;

  std::vector<double> roots;
  const double scale = std::max({std::abs(qb), std::abs(qc), 1.0});
  if (std::abs(qa) <= 1e-14 * scale) {
    if (std::abs(qb) <= 1e-14 * std::max(std::abs(qc), 1.0)) return {};
    roots.push_back(-qc / qb);
  } else {
    roots = quadratic_roots(qa, qb, qc);
  }

  std::vector<double> out;
  for (double t : roots) {
    const double den = c.N * t + p3v;
    if (std::abs(den) <= 1e-9 * denom_scale(c, p3v, t)) continue;  // pole
    if (!std::isfinite(t)) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Segment aux_segment(const Segment& s, const Point& q1, double beta) {
  if (!(beta >= 1.0)) throw std::invalid_argument("aux_segment: beta must be >= 1");
  return homothety_segment(q1, 1.0 / beta, s);
}

bool blocked(const SegmentSet& S, const BlockedRegionQuery& q, double t1, double t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2))
    throw std::invalid_argument("blocked: non-finite parameters");
  const Point g1 = param_point(S.sites[q.s1], t1);
  const Point g2 = param_point(S.sites[q.s2], t2);
  const Neighborhood N = make_neighborhood(g1, g2, q.spec, S.tol);
  const Segment& blocker = S.sites[q.s];

  if (q.side == BlockSide::full) return segment_intersects_nbhd(N, blocker, S.tol);
  const int idx = (q.side == BlockSide::disc1 || N.disc_count == 1) ? 0 : 1;
  return segment_intersects_disc(N.discs[idx], blocker, q.spec.closure, S.tol);
}

}  // namespace segskel
