#pragma once

#include <span>

#include "logcheb/types.hpp"

namespace logcheb {

// Unnormalized cosine transforms on the first-kind Chebyshev angles.
// With x_j = cos((2j+1)pi/2n) and A the Vandermonde matrix A[j][k] = T_k(x_j):
//
//   dct2(u)[k] = sum_j u[j] cos(k(2j+1)pi/2n)      (A^T u)
//   dct3(v)[j] = sum_k v[k] cos(k(2j+1)pi/2n)      (A v)
//
// They satisfy dct2(dct3(v)) = diag(n, n/2, ..., n/2) v.
// The fast path runs in O(n log n) for arbitrary n; inputs shorter than 16
// elements go through the direct summation.
RealVector dct2(std::span<const double> u);
RealVector dct3(std::span<const double> v);

// Complex transforms are the linear extension: real and imaginary parts are
// transformed independently.
ComplexVector dct2(std::span<const Complex> u);
ComplexVector dct3(std::span<const Complex> v);

// Direct O(n^2) evaluation of the same sums; reference implementation.
RealVector dct2_naive(std::span<const double> u);
RealVector dct3_naive(std::span<const double> v);

}  // namespace logcheb
