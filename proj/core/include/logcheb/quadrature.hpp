#pragma once

#include <functional>

#include "logcheb/types.hpp"

namespace logcheb {

struct QuadratureResult {
  Complex value{};
  int n1 = 0;
  int n2 = 0;
  long function_evals = 0;
  double elapsed_seconds = 0.0;
};

// Interpolatory quadrature for integrands g1(x) + g2(x) log|x-alpha| over
// [-1,1]: fit the enriched interpolant and contract its coefficients with the
// plain and log-weighted Chebyshev moments. Exact on the enriched span.
QuadratureResult integrate_singular(const std::function<Complex(double)>& f, double alpha, int n1, int n2);

// For strictly interior alpha: splits [-1,1] at alpha, maps each half onto
// [-1,1] with the singularity at the left end, and applies the direct rule to
// both. Twice the function evaluations, usually far smaller error.
QuadratureResult split_integrate(const std::function<Complex(double)>& f, double alpha, int n1, int n2);

struct SplitParts {
  QuadratureResult left;   // contribution of [-1, alpha]
  QuadratureResult right;  // contribution of [alpha, 1]
  QuadratureResult total;
};
SplitParts split_integrate_parts(const std::function<Complex(double)>& f, double alpha, int n1, int n2);

struct QuadRule {
  RealVector nodes;
  RealVector weights;
};

// Fejer rule of the first kind: interpolatory weights at the first-kind
// Chebyshev points, computed from the plain Chebyshev moments by one dct3.
QuadRule fejer1(int m);

// Breakpoints a + (b-a) (j/segments)^q, clustering toward a.
struct GradedMesh {
  int segments = 0;
  double exponent = 0.0;
  RealVector breakpoints;
};
GradedMesh graded_mesh(int segments, double q, double a, double b);

// Composite Fejer-1 rule over a mesh graded toward the endpoint a.
Complex graded_fejer(const std::function<Complex(double)>& f, int segments, int per_segment, double q, double a,
                     double b);

// integral of |f| over [-1,1] on the graded composite metric: `segments` x 4
// nodes graded toward alpha (split at alpha with half the segments per side
// when alpha is interior).
double graded_l1_norm(const std::function<Complex(double)>& f, double alpha, int segments = 256);

// L1 distance of f and g measured on the graded metric with 1024 evaluations.
double l1_error(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g, double alpha);

// max |f-g| over the 100000 equally spaced samples -1 + 2i/100000, i=1..100000.
double max_error(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g);

}  // namespace logcheb
