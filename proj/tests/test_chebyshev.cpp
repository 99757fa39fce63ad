#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "logcheb/chebyshev.hpp"
#include "logcheb/transforms.hpp"
#include "oracles.hpp"

using logcheb::cheb_points;
using logcheb::ChebyshevGrid;
using logcheb::clenshaw_t;
using logcheb::RealVector;
using logcheb::u_poly_eval;

TEST_CASE("grid values") {
  CHECK(std::abs(cheb_points(1).points[0]) < 1e-15);
  const ChebyshevGrid g2 = cheb_points(2);
  CHECK(g2.points[0] == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(g2.points[1] == doctest::Approx(-std::sqrt(2.0) / 2.0));
  const ChebyshevGrid g4 = cheb_points(4);
  for (int j = 0; j < 4; ++j)
    CHECK(g4.points[static_cast<std::size_t>(j)] ==
          doctest::Approx(std::cos((2.0 * j + 1.0) * std::numbers::pi / 8.0)));
  CHECK_THROWS_AS((void)cheb_points(0), std::invalid_argument);
}

TEST_CASE("grid is decreasing, interior and symmetric") {
  for (const int n : {1, 2, 5, 16, 33, 64}) {
    const ChebyshevGrid g = cheb_points(n);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(g.points[static_cast<std::size_t>(j)]) < 1.0);
      if (j > 0) CHECK(g.points[static_cast<std::size_t>(j)] < g.points[static_cast<std::size_t>(j - 1)]);
      CHECK(std::abs(g.points[static_cast<std::size_t>(j)] + g.points[static_cast<std::size_t>(n - 1 - j)]) < 1e-15);
    }
  }
}

TEST_CASE("clenshaw examples") {
  const RealVector t2{0.0, 0.0, 1.0};
  CHECK(clenshaw_t(std::span<const double>(t2), 0.5) == doctest::Approx(-0.5));
  const RealVector c0{1.0};
  CHECK(clenshaw_t(std::span<const double>(c0), -0.73) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)clenshaw_t(std::span<const double>(c0), 1.5), std::domain_error);
}

TEST_CASE("clenshaw matches the trigonometric sum") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealVector c(10);
  for (auto& v : c) v = dist(rng);
  const double x = 0.3;
  double direct = 0.0;
  for (int k = 0; k < 10; ++k) direct += c[static_cast<std::size_t>(k)] * std::cos(k * std::acos(x));
  CHECK(std::abs(clenshaw_t(std::span<const double>(c), x) - direct) < 1e-13);
}

TEST_CASE("clenshaw on the grid reproduces dct3") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const int n : {1, 4, 9, 32}) {
    RealVector c(static_cast<std::size_t>(n));
    for (auto& v : c) v = dist(rng);
    const RealVector grid_vals = logcheb::dct3(std::span<const double>(c));
    const ChebyshevGrid g = cheb_points(n);
    double scale = 0.0;
    for (const double v : grid_vals) scale = std::max(scale, std::abs(v));
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(clenshaw_t(std::span<const double>(c), g.points[static_cast<std::size_t>(j)]) -
                     grid_vals[static_cast<std::size_t>(j)]) < 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("second-kind values and the T/U identity") {
  CHECK(u_poly_eval(0, 0.7) == doctest::Approx(1.0));
  CHECK(u_poly_eval(1, 0.5) == doctest::Approx(1.0));
  CHECK(u_poly_eval(2, 0.5) == doctest::Approx(0.0).scale(1.0));

  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = dist(rng);
    for (int k = 2; k <= 32; ++k) {
      const double lhs = oracles::cheb_t(k, x);
      const double rhs = (u_poly_eval(k, x) - u_poly_eval(k - 2, x)) / 2.0;
      CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(u_poly_eval(k, x))));
    }
  }
}
