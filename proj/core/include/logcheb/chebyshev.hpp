#pragma once

#include <span>

#include "logcheb/types.hpp"

namespace logcheb {

// First-kind Chebyshev points x_j = cos((2j+1)pi/2n), j = 0..n-1.
// Strictly decreasing, all in (-1, 1).
struct ChebyshevGrid {
  int n = 0;
  RealVector points;
};

ChebyshevGrid cheb_points(int n);

// Evaluates sum_k coeffs[k] T_k(x) by the Clenshaw recurrence. Requires
// |x| <= 1 and a nonempty coefficient sequence.
double clenshaw_t(std::span<const double> coeffs, double x);
Complex clenshaw_t(std::span<const Complex> coeffs, double x);

// Second-kind Chebyshev polynomial U_k(x) by the three-term recurrence.
double u_poly_eval(int k, double x);

}  // namespace logcheb
