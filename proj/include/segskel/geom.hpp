#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segskel {

/// Absolute geometric tolerance at unit scale. Inputs are expected to be
/// normalized to (roughly) the unit box; see the CLI --normalize flag.
inline constexpr double kGeomTol = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Counter-clockwise quarter turn.
inline Point perp(Point v) { return {-v.y, v.x}; }

inline Point normalized(Point v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {v.x / n, v.y / n};
}

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;

  Point dir() const { return b - a; }
  double length() const { return dist(a, b); }
};

struct Disc {
  Point center;
  double radius = 0.0;
};

/// The input sites. Sites must be pairwise disjoint; degenerate (point)
/// sites are accepted only when allow_degenerate is set.
struct SegmentSet {
  std::vector<Segment> sites;
  double tol = kGeomTol;
  bool allow_degenerate = false;

  int size() const { return static_cast<int>(sites.size()); }
};

/// Point on the supporting line of s: (1-t)*a + t*b. Exact at t=0 and t=1.
Point param_point(const Segment& s, double t);

/// Unsigned angle at v subtended by a and b, in [0, pi].
double angle_at(const Point& v, const Point& a, const Point& b);

Point homothety_point(const Point& center, double ratio, const Point& p);

/// Scales s about center by ratio > 0.
Segment homothety_segment(const Point& center, double ratio, const Segment& s);

/// Parameter in [0,1] of the point of s closest to p.
double closest_param(const Point& p, const Segment& s);

/// Euclidean distance from p to the closed segment s.
double dist_point_segment(const Point& p, const Segment& s);

/// Distance from p to the supporting line of s (s must be non-degenerate).
double dist_point_line(const Point& p, const Segment& s);

/// Minimum distance between two closed segments (0 when they cross).
double dist_segment_segment(const Segment& s, const Segment& t);

/// Closest pair of points (one on each segment) for disjoint segments; the
/// minimum is always attained with an endpoint on one side.
std::pair<Point, Point> closest_pair_points(const Segment& s, const Segment& t);

enum class ViolationKind { crossing, collinear_endpoints, degenerate_site };

struct GeneralPositionViolation {
  ViolationKind kind;
  int i = -1;
  int j = -1;
  int k = -1;  // third site for collinearity, -1 otherwise
  std::string message;
};

/// Checks pairwise disjointness and triple endpoint collinearity within the
/// set tolerance. Returns the first violation found, or nullopt.
std::optional<GeneralPositionViolation> validate_general_position(const SegmentSet& S);

}  // namespace segskel
