#include "segskel/polyroot.hpp"

#include <algorithm>
#include <cmath>

namespace segskel {

double poly_eval(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (double c : coeffs) v = v * x + c;
  return v;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = c / q;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

namespace {

std::vector<double> derivative(const std::vector<double>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> d;
  d.reserve(deg);
  for (int i = 0; i < deg; ++i) d.push_back(c[i] * static_cast<double>(deg - i));
  return d;
}

double bisect(const std::vector<double>& c, double lo, double hi) {
  double flo = poly_eval(c, lo);
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = poly_eval(c, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // Newton polish
  const std::vector<double> d = derivative(c);
  for (int it = 0; it < 3; ++it) {
    const double fd = poly_eval(d, x);
    if (fd == 0.0) break;
    const double step = poly_eval(c, x) / fd;
    const double nx = x - step;
    if (nx < lo || nx > hi) break;
    x = nx;
  }
  return x;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs) {
  // Strip leading coefficients that are exactly zero.
  std::vector<double> c = coeffs;
  while (!c.empty() && c.front() == 0.0) c.erase(c.begin());
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[1] / c[0]};
  if (deg == 2) return quadratic_roots(c[0], c[1], c[2]);

  // Cauchy bound on root magnitudes.
  double bound = 0.0;
  for (int i = 1; i <= deg; ++i) bound = std::max(bound, std::abs(c[i] / c[0]));
  bound += 1.0;

  std::vector<double> breaks = real_roots(derivative(c));
  breaks.push_back(-bound);
  breaks.push_back(bound);
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    if (!(hi > lo)) continue;
    const double flo = poly_eval(c, lo);
    const double fhi = poly_eval(c, hi);
    if (flo == 0.0 && (roots.empty() || roots.back() != lo)) roots.push_back(lo);
    if ((flo < 0.0 && fhi > 0.0) || (flo > 0.0 && fhi < 0.0))
      roots.push_back(bisect(c, lo, hi));
  }
  const double fend = poly_eval(c, breaks.back());
  if (fend == 0.0) roots.push_back(breaks.back());

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              roots.end());
  return roots;
}

}  // namespace segskel
