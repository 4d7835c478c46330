#include "segskel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace segskel {

namespace {

constexpr double kCanvas = 800.0;
constexpr int kArcSamples = 48;

struct Mapper {
  Point lo;
  double scale;
  double height;

  Point operator()(const Point& p) const {
    return {(p.x - lo.x) * scale, height - (p.y - lo.y) * scale};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string polyline_path(const std::vector<Point>& pts, bool close) {
  std::string d;
  for (size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M" : "L");
    d += fmt(pts[i].x) + " " + fmt(pts[i].y);
  }
  if (close) d += "Z";
  return d;
}

/// Points of the arc of `circle` between its two intersections with `other`,
/// keeping the side that is inside (keep_inside) or outside the other disc.
std::vector<Point> boundary_arc(const Disc& circle, const Disc& other, bool keep_inside) {
  const double d = dist(circle.center, other.center);
  std::vector<Point> pts;
  if (d <= 1e-15) {  // coincident circles: full circle
    for (int k = 0; k <= kArcSamples; ++k) {
      const double a = 2.0 * kPi * k / kArcSamples;
      pts.push_back(circle.center + Point{circle.radius * std::cos(a), circle.radius * std::sin(a)});
    }
    return pts;
  }
  const double r1 = circle.radius, r2 = other.radius;
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Point u = (1.0 / d) * (other.center - circle.center);
  const Point mid = circle.center + a * u;
  const Point p = mid + h * perp(u);
  const Point q = mid - h * perp(u);

  const double ap = std::atan2(p.y - circle.center.y, p.x - circle.center.x);
  double aq = std::atan2(q.y - circle.center.y, q.x - circle.center.x);
  if (aq < ap) aq += 2.0 * kPi;

  // Candidate arc from p to q counter-clockwise; test its midpoint.
  const double amid = 0.5 * (ap + aq);
  const Point pm = circle.center + Point{r1 * std::cos(amid), r1 * std::sin(amid)};
  const bool mid_inside = dist(pm, other.center) <= r2;
  double from = ap, to = aq;
  if (mid_inside != keep_inside) {
    from = aq;
    to = ap + 2.0 * kPi;
  }
  for (int k = 0; k <= kArcSamples; ++k) {
    const double t = from + (to - from) * k / kArcSamples;
    pts.push_back(circle.center + Point{r1 * std::cos(t), r1 * std::sin(t)});
  }
  return pts;
}

}  // namespace

void write_svg(const std::string& path, const SegmentSet& S, const SkeletonGraph& g,
               const std::optional<BetaSpec>& spec) {
  Point lo{0, 0}, hi{1, 1};
  if (!S.sites.empty()) {
    lo = hi = S.sites[0].a;
    for (const Segment& s : S.sites)
      for (const Point& p : {s.a, s.b}) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
      }
  }
  const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-9});
  const double pad = 0.15 * span;
  lo = lo - Point{pad, pad};
  const double world = span + 2.0 * pad;
  const Mapper map{lo, kCanvas / world, kCanvas};

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open SVG output file: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas
      << "\">\n";
  out << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";

  // Witness neighborhoods first so that sites and edges draw on top.
  if (spec) {
    for (const auto& e : g.edges) {
      if (!e.witness) continue;
      const Point v1 = param_point(S.sites[e.i], e.witness->t1);
      const Point v2 = param_point(S.sites[e.j], e.witness->t2);
      const Neighborhood N = make_neighborhood(v1, v2, *spec, S.tol);
      std::vector<Point> outline;
      if (N.disc_count == 1) {
        for (int k = 0; k <= kArcSamples; ++k) {
          const double a = 2.0 * kPi * k / kArcSamples;
          outline.push_back(N.discs[0].center +
                            Point{N.discs[0].radius * std::cos(a), N.discs[0].radius * std::sin(a)});
        }
      } else {
        const bool keep_inside = N.combine == Combine::intersect;
        outline = boundary_arc(N.discs[0], N.discs[1], keep_inside);
        const auto second = boundary_arc(N.discs[1], N.discs[0], keep_inside);
        outline.insert(outline.end(), second.begin(), second.end());
      }
      for (Point& p : outline) p = map(p);
      out << "<path d=\"" << polyline_path(outline, true)
          << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
  }

  for (const auto& e : g.edges) {
    Point v1, v2;
    if (e.witness) {
      v1 = param_point(S.sites[e.i], e.witness->t1);
      v2 = param_point(S.sites[e.j], e.witness->t2);
    } else {
      v1 = param_point(S.sites[e.i], 0.5);
      v2 = param_point(S.sites[e.j], 0.5);
    }
    const Point a = map(v1), b = map(v2);
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#2040c0\" stroke-width=\"1.5\"/>\n";
  }

  for (const Segment& s : S.sites) {
    const Point a = map(s.a), b = map(s.b);
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y)
        << "\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  }

  out << "</svg>\n";
}

}  // namespace segskel
