#include "logcheb/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logcheb {
namespace {

void require_in_domain(double x) {
  if (std::abs(x) > 1.0) throw std::domain_error("outside domain");
}

template <typename Scalar>
Scalar clenshaw_impl(std::span<const Scalar> c, double x) {
  if (c.empty()) throw std::invalid_argument("empty coefficient sequence");
  require_in_domain(x);
  Scalar b1{};
  Scalar b2{};
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    const Scalar next = c[i] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = next;
  }
  return c[0] + x * b1 - b2;
}

}  // namespace

ChebyshevGrid cheb_points(int n) {
  if (n < 1) throw std::invalid_argument("grid size must be positive");
  ChebyshevGrid grid;
  grid.n = n;
  grid.points.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    grid.points[static_cast<std::size_t>(j)] = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * n));
  return grid;
}

double clenshaw_t(std::span<const double> coeffs, double x) { return clenshaw_impl(coeffs, x); }

Complex clenshaw_t(std::span<const Complex> coeffs, double x) { return clenshaw_impl(coeffs, x); }

double u_poly_eval(int k, double x) {
  require_in_domain(x);
  if (k < 0) throw std::invalid_argument("negative degree");
  double um1 = 1.0;           // U_0
  if (k == 0) return um1;
  double u = 2.0 * x;         // U_1
  for (int i = 2; i <= k; ++i) {
    const double next = 2.0 * x * u - um1;
    um1 = u;
    u = next;
  }
  return u;
}

}  // namespace logcheb
