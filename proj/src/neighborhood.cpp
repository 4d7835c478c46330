#include "segskel/neighborhood.hpp"

#include <algorithm>
#include <cmath>

namespace segskel {

namespace {

void check_beta(const BetaSpec& spec) {
  if (!std::isfinite(spec.beta) || spec.beta <= 0.0)
    throw std::invalid_argument("beta must be finite and positive");
}

}  // namespace

double delta_of_beta(const BetaSpec& spec) {
  check_beta(spec);
  if (spec.beta == 1.0) return kPi / 2.0;
  if (spec.variant == Variant::lune) {
    if (spec.beta > 1.0)
      throw std::invalid_argument(
          "delta_of_beta: lune boundaries have a constant inscribed angle only for beta <= 1");
    return kPi - std::asin(spec.beta);
  }
  if (spec.beta < 1.0)
    throw std::invalid_argument("delta_of_beta: circle variant requires beta >= 1");
  return std::asin(1.0 / spec.beta);
}

Neighborhood make_neighborhood(const Point& v1, const Point& v2, const BetaSpec& spec,
                               double tol) {
  check_beta(spec);
  const double d = dist(v1, v2);
  if (d <= tol) throw std::invalid_argument("make_neighborhood: coincident generators");

  Neighborhood N;
  N.v1 = v1;
  N.v2 = v2;
  N.spec = spec;

  const double beta = spec.beta;
  if (beta == 1.0) {
    N.combine = Combine::single;
    N.disc_count = 1;
    N.discs[0] = {0.5 * (v1 + v2), 0.5 * d};
    return N;
  }

  const bool chord_type = beta < 1.0 || spec.variant == Variant::circle;
  if (chord_type) {
    // Two discs having the generator segment as a chord. Their centers sit at
    // mid +- kappa * perp(v2 - v1), which keeps them linear in the generators.
    const double gamma = beta < 1.0 ? 1.0 / (2.0 * beta) : beta / 2.0;
    const double kappa = std::sqrt(std::max(0.0, gamma * gamma - 0.25));
    const Point mid = 0.5 * (v1 + v2);
    const Point off = kappa * perp(v2 - v1);
    const double r = gamma * d;
    N.discs[0] = {mid + off, r};
    N.discs[1] = {mid - off, r};
    N.disc_count = 2;
    N.combine = (beta < 1.0) ? Combine::intersect : Combine::unite;
    return N;
  }

  // Lune for beta > 1: intersection of the disc through v1 and the disc
  // through v2, both of radius beta*d/2.
  const double h = beta / 2.0;
  N.discs[0] = {(1.0 - h) * v1 + h * v2, h * d};
  N.discs[1] = {h * v1 + (1.0 - h) * v2, h * d};
  N.disc_count = 2;
  N.combine = Combine::intersect;
  return N;
}

namespace {

bool disc_contains(const Disc& disc, const Point& p, Closure closure, double tol) {
  const double d = dist(p, disc.center);
  return closure == Closure::closed ? d <= disc.radius + tol : d < disc.radius - tol;
}

}  // namespace

bool nbhd_contains(const Neighborhood& N, const Point& p, double tol) {
  const Closure cl = N.spec.closure;
  switch (N.combine) {
    case Combine::single:
      return disc_contains(N.discs[0], p, cl, tol);
    case Combine::intersect:
      return disc_contains(N.discs[0], p, cl, tol) && disc_contains(N.discs[1], p, cl, tol);
    case Combine::unite:
      return disc_contains(N.discs[0], p, cl, tol) || disc_contains(N.discs[1], p, cl, tol);
  }
  return false;
}

std::optional<std::pair<double, double>> disc_segment_interval(const Disc& disc,
                                                               const Segment& s,
                                                               double radius_offset,
                                                               double tol) {
  const double r = disc.radius + radius_offset;
  if (r < 0.0) return std::nullopt;
  const Point u = s.dir();
  const Point w = s.a - disc.center;

  if (norm(u) <= tol) {
    // Point-like site: inside or out, decided at the midpoint.
    const Point m = param_point(s, 0.5);
    if (dist(m, disc.center) <= r) return std::make_pair(0.0, 1.0);
    return std::nullopt;
  }

  const double A = norm_sq(u);
  const double B = 2.0 * dot(u, w);
  const double C = norm_sq(w) - r * r;
  const double disc_q = B * B - 4.0 * A * C;
  if (disc_q < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc_q);
  const double q = -0.5 * (B + std::copysign(sq, B));
  double t0, t1;
  if (q == 0.0) {
    t0 = t1 = -B / (2.0 * A);
  } else {
    t0 = q / A;
    t1 = C / q;
    if (t0 > t1) std::swap(t0, t1);
  }
  const double lo = std::max(t0, 0.0);
  const double hi = std::min(t1, 1.0);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool segment_intersects_disc(const Disc& disc, const Segment& s, Closure closure, double tol) {
  const double off = closure == Closure::closed ? tol : -tol;
  const double d = dist_point_segment(disc.center, s);
  return closure == Closure::closed ? d <= disc.radius + off : d < disc.radius + off;
}

bool segment_intersects_nbhd(const Neighborhood& N, const Segment& s, double tol) {
  const Closure cl = N.spec.closure;
  const double off = cl == Closure::closed ? tol : -tol;

  if (N.combine == Combine::single) return segment_intersects_disc(N.discs[0], s, cl, tol);
  if (N.combine == Combine::unite)
    return segment_intersects_disc(N.discs[0], s, cl, tol) ||
           segment_intersects_disc(N.discs[1], s, cl, tol);

  // Intersection: the parameter intervals inside both discs must overlap.
  const auto i0 = disc_segment_interval(N.discs[0], s, off, tol);
  if (!i0) return false;
  const auto i1 = disc_segment_interval(N.discs[1], s, off, tol);
  if (!i1) return false;
  const double lo = std::max(i0->first, i1->first);
  const double hi = std::min(i0->second, i1->second);
  return cl == Closure::closed ? lo <= hi : lo < hi;
}

}  // namespace segskel
