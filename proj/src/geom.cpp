#include "segskel/geom.hpp"

#include <algorithm>
#include <cmath>

namespace segskel {

Point param_point(const Segment& s, double t) {
  // std::lerp guarantees the endpoints are reproduced exactly.
  return {std::lerp(s.a.x, s.b.x, t), std::lerp(s.a.y, s.b.y, t)};
}

double angle_at(const Point& v, const Point& a, const Point& b) {
  const Point u = a - v;
  const Point w = b - v;
  if (norm(u) <= kGeomTol || norm(w) <= kGeomTol)
    throw std::invalid_argument("angle_at: vertex coincides with a ray endpoint");
  return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

Point homothety_point(const Point& center, double ratio, const Point& p) {
  return center + ratio * (p - center);
}

Segment homothety_segment(const Point& center, double ratio, const Segment& s) {
  if (!(ratio > 0.0))
    throw std::invalid_argument("homothety_segment: ratio must be positive");
  return {homothety_point(center, ratio, s.a), homothety_point(center, ratio, s.b)};
}

double closest_param(const Point& p, const Segment& s) {
  const Point u = s.dir();
  const double len2 = norm_sq(u);
  if (len2 == 0.0) return 0.0;
  return std::clamp(dot(p - s.a, u) / len2, 0.0, 1.0);
}

double dist_point_segment(const Point& p, const Segment& s) {
  return dist(p, param_point(s, closest_param(p, s)));
}

double dist_point_line(const Point& p, const Segment& s) {
  const Point u = s.dir();
  const double len = norm(u);
  if (len <= kGeomTol)
    throw std::invalid_argument("dist_point_line: degenerate segment");
  return std::abs(cross(u, p - s.a)) / len;
}

namespace {

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool proper_crossing(const Segment& s, const Segment& t) {
  const int o1 = orientation_sign(s.a, s.b, t.a);
  const int o2 = orientation_sign(s.a, s.b, t.b);
  const int o3 = orientation_sign(t.a, t.b, s.a);
  const int o4 = orientation_sign(t.a, t.b, s.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

double dist_segment_segment(const Segment& s, const Segment& t) {
  if (proper_crossing(s, t)) return 0.0;
  double d = dist_point_segment(t.a, s);
  d = std::min(d, dist_point_segment(t.b, s));
  d = std::min(d, dist_point_segment(s.a, t));
  d = std::min(d, dist_point_segment(s.b, t));
  return d;
}

std::pair<Point, Point> closest_pair_points(const Segment& s, const Segment& t) {
  std::pair<Point, Point> best{s.a, t.a};
  double best_d = dist(s.a, t.a);
  auto consider = [&](const Point& on_s, const Point& on_t) {
    const double d = dist(on_s, on_t);
    if (d < best_d) {
      best_d = d;
      best = {on_s, on_t};
    }
  };
  consider(param_point(s, closest_param(t.a, s)), t.a);
  consider(param_point(s, closest_param(t.b, s)), t.b);
  consider(s.a, param_point(t, closest_param(s.a, t)));
  consider(s.b, param_point(t, closest_param(s.b, t)));
  return best;
}

std::optional<GeneralPositionViolation> validate_general_position(const SegmentSet& S) {
  const double tol = S.tol;
  const int n = S.size();

  for (int i = 0; i < n; ++i) {
    const Segment& s = S.sites[i];
    if (!finite(s.a) || !finite(s.b))
      return GeneralPositionViolation{ViolationKind::degenerate_site, i, -1, -1,
                                      "site " + std::to_string(i) + " has non-finite coordinates"};
    if (s.length() <= tol && !S.allow_degenerate)
      return GeneralPositionViolation{ViolationKind::degenerate_site, i, -1, -1,
                                      "site " + std::to_string(i) +
                                          " is degenerate (enable point-site mode to allow it)"};
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist_segment_segment(S.sites[i], S.sites[j]) <= tol)
        return GeneralPositionViolation{ViolationKind::crossing, i, j, -1,
                                        "sites " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are not disjoint"};

  // Endpoint list; a degenerate site contributes a single representative point.
  struct Labeled {
    Point p;
    int site;
  };
  std::vector<Labeled> pts;
  for (int i = 0; i < n; ++i) {
    const Segment& s = S.sites[i];
    if (s.length() <= tol) {
      pts.push_back({param_point(s, 0.5), i});
    } else {
      pts.push_back({s.a, i});
      pts.push_back({s.b, i});
    }
  }

  const int m = static_cast<int>(pts.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (dist(pts[a].p, pts[b].p) <= tol) continue;  // ill-defined line
      const Segment line{pts[a].p, pts[b].p};
      for (int c = b + 1; c < m; ++c) {
        if (dist_point_line(pts[c].p, line) <= tol)
          return GeneralPositionViolation{
              ViolationKind::collinear_endpoints, pts[a].site, pts[b].site, pts[c].site,
              "endpoints of sites " + std::to_string(pts[a].site) + ", " +
                  std::to_string(pts[b].site) + ", " + std::to_string(pts[c].site) +
                  " are collinear"};
      }
    }

  return std::nullopt;
}

}  // namespace segskel
