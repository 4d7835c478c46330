#pragma once

#include <array>
#include <vector>

namespace segskel {

/// Real roots of a polynomial with coefficients in descending degree order
/// (coeffs[0] is the leading coefficient). Handles degree <= 4, which is all
/// the curve intersections in this project need. Roots are isolated by
/// recursing on the derivative (whose roots bracket the monotone pieces) and
/// refined by bisection plus a few Newton steps; roots of even multiplicity
/// (tangencies) produce no sign change and are not reported.
std::vector<double> real_roots(const std::vector<double>& coeffs);

/// Stable real roots of a*x^2 + b*x + c = 0 (empty, one, or two, ascending).
std::vector<double> quadratic_roots(double a, double b, double c);

double poly_eval(const std::vector<double>& coeffs, double x);

}  // namespace segskel
