#include "logcheb/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "logcheb/chebyshev.hpp"
#include "logcheb/loginterp.hpp"
#include "logcheb/moments.hpp"
#include "logcheb/transforms.hpp"

namespace logcheb {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

QuadratureResult integrate_singular(const std::function<Complex(double)>& f, double alpha, int n1, int n2) {
  const auto start = std::chrono::steady_clock::now();
  const SingularInterpolant interp = fit(f, alpha, n1, n2);

  Complex value{};
  for (int j = 0; j < n1; ++j) value += interp.a[static_cast<std::size_t>(j)] * xi1(j);
  if (n2 > 0) {
    const RealVector xi2 = xi2_table(alpha, n2);
    for (int k = 0; k < n2; ++k) value += interp.b[static_cast<std::size_t>(k)] * xi2[static_cast<std::size_t>(k)];
  }

  QuadratureResult result;
  result.value = value;
  result.n1 = n1;
  result.n2 = n2;
  result.function_evals = n1 + n2;
  result.elapsed_seconds = seconds_since(start);
  return result;
}

SplitParts split_integrate_parts(const std::function<Complex(double)>& f, double alpha, int n1, int n2) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw std::domain_error("use direct rule");
  const auto start = std::chrono::steady_clock::now();

  // x = alpha +- c (t+1) maps each half onto t in [-1,1] with the
  // singularity at t = -1; c is also the Jacobian.
  const double c_left = (1.0 + alpha) / 2.0;
  const double c_right = (1.0 - alpha) / 2.0;
  const auto left_f = [&f, alpha, c_left](double t) { return f(alpha - c_left * (t + 1.0)); };
  const auto right_f = [&f, alpha, c_right](double t) { return f(alpha + c_right * (t + 1.0)); };

  SplitParts parts;
  parts.left = integrate_singular(left_f, -1.0, n1, n2);
  parts.left.value *= c_left;
  parts.right = integrate_singular(right_f, -1.0, n1, n2);
  parts.right.value *= c_right;

  parts.total.value = parts.left.value + parts.right.value;
  parts.total.n1 = n1;
  parts.total.n2 = n2;
  parts.total.function_evals = 2L * (n1 + n2);
  parts.total.elapsed_seconds = seconds_since(start);
  return parts;
}

QuadratureResult split_integrate(const std::function<Complex(double)>& f, double alpha, int n1, int n2) {
  return split_integrate_parts(f, alpha, n1, n2).total;
}

QuadRule fejer1(int m) {
  if (m < 1) throw std::invalid_argument("rule size must be positive");
  // interpolatory weights w = A D^{-1} xi1
  RealVector scaled(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double d = k == 0 ? static_cast<double>(m) : static_cast<double>(m) / 2.0;
    scaled[static_cast<std::size_t>(k)] = xi1(k) / d;
  }
  QuadRule rule;
  rule.nodes = cheb_points(m).points;
  rule.weights = dct3(std::span<const double>(scaled));
  return rule;
}

GradedMesh graded_mesh(int segments, double q, double a, double b) {
  if (segments < 1) throw std::invalid_argument("need at least one segment");
  GradedMesh mesh;
  mesh.segments = segments;
  mesh.exponent = q;
  mesh.breakpoints.resize(static_cast<std::size_t>(segments) + 1);
  for (int j = 0; j <= segments; ++j) {
    const double s = std::pow(static_cast<double>(j) / static_cast<double>(segments), q);
    mesh.breakpoints[static_cast<std::size_t>(j)] = a + (b - a) * s;
  }
  mesh.breakpoints.front() = a;
  mesh.breakpoints.back() = b;
  return mesh;
}

Complex graded_fejer(const std::function<Complex(double)>& f, int segments, int per_segment, double q, double a,
                     double b) {
  const GradedMesh mesh = graded_mesh(segments, q, a, b);
  const QuadRule rule = fejer1(per_segment);
  Complex total{};
  for (int j = 0; j < segments; ++j) {
    const double lo = mesh.breakpoints[static_cast<std::size_t>(j)];
    const double hi = mesh.breakpoints[static_cast<std::size_t>(j) + 1];
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Complex acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += half * acc;
  }
  return total;
}

double graded_l1_norm(const std::function<Complex(double)>& f, double alpha, int segments) {
  const auto magnitude = [&f](double x) { return Complex(std::abs(f(x)), 0.0); };
  if (alpha <= -1.0) return graded_fejer(magnitude, segments, 4, 4.0, -1.0, 1.0).real();
  if (alpha >= 1.0) {
    const auto reflected = [&magnitude](double x) { return magnitude(-x); };
    return graded_fejer(reflected, segments, 4, 4.0, -1.0, 1.0).real();
  }
  // interior: grade toward alpha from both sides, half the segments each
  const int per_side = std::max(1, segments / 2);
  const double right = graded_fejer(magnitude, per_side, 4, 4.0, alpha, 1.0).real();
  const auto mirrored = [&magnitude, alpha](double s) { return magnitude(alpha - (s - alpha)); };
  const double left = graded_fejer(mirrored, per_side, 4, 4.0, alpha, alpha + (alpha + 1.0)).real();
  return right + left;
}

double l1_error(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g, double alpha) {
  return graded_l1_norm([&f, &g](double x) { return f(x) - g(x); }, alpha, 256);
}

double max_error(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g) {
  double worst = 0.0;
  for (int i = 1; i <= 100000; ++i) {
    const double x = -1.0 + 2.0 * static_cast<double>(i) / 100000.0;
    worst = std::max(worst, std::abs(f(x) - g(x)));
  }
  return worst;
}

}  // namespace logcheb
