#pragma once

#include <array>
#include <optional>
#include <vector>

#include "segskel/geom.hpp"
#include "segskel/neighborhood.hpp"

namespace segskel {

enum class Orientation { cw, ccw };

/// Coefficients of the refracted-ray correspondence between a generator on
/// P(s1) and the second generator on P(s2), for a fixed middle segment s and
/// refraction angle delta.
///
/// With q1(t1) on P(s1) and q(t) on P(s), the connecting vector is
///   w(t, t1) = [A1 t + B1 t1 + C1, A2 t + B2 t1 + C2].
/// The ray refracts at q(t) into direction r = R(+-delta) w with components
///   rx = D t + E t1 + F,   ry = G t + H t1 + I,
/// and meets P(s2) at parameter z along the ray,
///   z = (K t2 + J t + L) / rx = (Ky t2 + Jy t + Ly) / ry.
/// Eliminating z yields the hyperbola in t (t1 fixed)
///   t2(t) = (M t^2 + p1(t1) t + p2(t1)) / (N t + p3(t1)),
/// where each p_i is stored as {quadratic, linear, constant} coefficients of
/// t1 (the quadratic term vanishes for straight-line sites).
struct RefractionCoeffs {
  double A1 = 0, B1 = 0, C1 = 0;
  double A2 = 0, B2 = 0, C2 = 0;
  double D = 0, E = 0, F = 0;
  double G = 0, H = 0, I = 0;
  double J = 0, K = 0, L = 0;
  double Jy = 0, Ky = 0, Ly = 0;
  double M = 0, N = 0;
  std::array<double, 3> p1{0, 0, 0};
  std::array<double, 3> p2{0, 0, 0};
  std::array<double, 3> p3{0, 0, 0};
  double delta = 0;
  Orientation orientation = Orientation::cw;
};

inline double eval_p(const std::array<double, 3>& p, double t1) {
  return (p[0] * t1 + p[1]) * t1 + p[2];
}

RefractionCoeffs refraction_coeffs(const Segment& s1, const Segment& s, const Segment& s2,
                                   double delta, Orientation orientation);

/// Hyperbola value t2(t) without the half-line constraint; nullopt at poles
/// (refracted direction parallel to P(s2)).
std::optional<double> t2_unclipped(const RefractionCoeffs& c, double t1, double t);

/// Parameter on P(s2) hit by the ray shot from q1(t1) and refracted at q(t).
/// nullopt when the refracted direction is parallel to P(s2), when the
/// connecting vector degenerates, or when the refracted half-line (z >= 0)
/// does not reach P(s2).
std::optional<double> t2_of(const RefractionCoeffs& c, double t1, double t);

/// Real critical points of t -> t2(t): roots of
///   M N t^2 + 2 M p3(t1) t + p1(t1) p3(t1) - N p2(t1) = 0,
/// poles excluded. Empty when the map is monotone between poles.
std::vector<double> extreme_t(const RefractionCoeffs& c, double t1);

/// Image of s under the homothety about q1 with ratio 1/beta. A ray from q1
/// refracting at a right angle on the image addresses the same blocked set
/// as requiring the original refraction point to lie on the disc through q1.
Segment aux_segment(const Segment& s, const Point& q1, double beta);

enum class BlockSide { full, disc1, disc2 };

/// Which region of the neighborhood generated by sites s1, s2 the blocker s
/// must hit: the whole neighborhood, or a single bounding disc (disc1 is the
/// one whose boundary passes through the generator on s1).
struct BlockedRegionQuery {
  int s1 = 0;
  int s = 0;
  int s2 = 0;
  BetaSpec spec;
  BlockSide side = BlockSide::full;
};

bool blocked(const SegmentSet& S, const BlockedRegionQuery& q, double t1, double t2);

}  // namespace segskel
