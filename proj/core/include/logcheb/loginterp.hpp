#pragma once

#include <functional>
#include <span>
#include <string>

#include "logcheb/types.hpp"

namespace logcheb {

// Interpolant a_0 T_0 + ... + a_{n1-1} T_{n1-1}
//            + log|x - alpha| * (b_0 T_0 + ... + b_{n2-1} T_{n2-1})
// matching the sampled function at the n = n1+n2 first-kind Chebyshev points.
// Coefficients are stored complex; fitting real data leaves the imaginary
// parts exactly zero.
struct SingularInterpolant {
  double alpha = 0.0;
  int n1 = 0;
  int n2 = 0;
  ComplexVector a;
  ComplexVector b;
};

Complex evaluate(const SingularInterpolant& interp, double x);

std::string to_json(const SingularInterpolant& interp);
SingularInterpolant interpolant_from_json(const std::string& text);

struct FitOptions {
  double gmres_tol = 1e-14;
  int gmres_maxit = 0;  // <= 0 selects the solver default
};

// Applies the reduced n2 x n2 operator to u: zero-pad u to length n, apply
// dct3, scale pointwise by log|x_j - alpha|, apply dct2 and keep the trailing
// n2 entries.
ComplexVector reduced_matvec(std::span<const Complex> u, double alpha, int n1, int n2);
RealVector reduced_matvec(std::span<const double> u, double alpha, int n1, int n2);

// Fits the interpolant from samples taken at cheb_points(n1+n2), or from a
// callable sampled there. The log coefficients solve the reduced system by
// matrix-free GMRES; the polynomial coefficients follow from one more
// transform pair. Throws if alpha collides with a grid point or the reduced
// system cannot be solved.
SingularInterpolant fit(std::span<const Complex> samples, double alpha, int n1, int n2, const FitOptions& opts = {});
SingularInterpolant fit(std::span<const double> samples, double alpha, int n1, int n2, const FitOptions& opts = {});
SingularInterpolant fit(const std::function<Complex(double)>& f, double alpha, int n1, int n2,
                        const FitOptions& opts = {});

// Sum of the L1 norms of the Lagrange-type basis functions of the enriched
// space: each unit sample vector is fitted and |l_j| integrated with the
// graded Fejer metric. Bounds the interpolation operator norm.
// segments_hint scales the metric resolution (default 256 segments x 4 nodes).
double lebesgue_l1(double alpha, int n1, int n2, int segments_hint = 256);

struct InvertibilityReport {
  bool invertible = false;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

// Materializes the reduced matrix from unit vectors and estimates its extreme
// singular values; flags singular when sigma_min < 1e-13 * sigma_max.
InvertibilityReport check_invertibility(double alpha, int n1, int n2);

}  // namespace logcheb
