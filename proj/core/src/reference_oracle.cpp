#include "logcheb/reference_oracle.hpp"

#include <cmath>
#include <numbers>

namespace logcheb::reference {
namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kEulerGamma = 0.577215664901532860606512090082L;

}  // namespace

LongComplex integrate_left_singular(const std::function<LongComplex(long double)>& f, long double length) {
  // s(t) = L / (1 + exp(-pi sinh t)),  ds/dt = pi cosh(t) s (L - s) / L.
  // Near the singular end s is formed from the exponential directly, which
  // keeps its relative accuracy; weights decay double-exponentially and cut
  // off long before the log blowup matters.
  const long double h0 = 0.5L;
  const int max_level = 9;
  LongComplex previous{};
  LongComplex total{};
  for (int level = 0; level <= max_level; ++level) {
    const long double h = h0 / static_cast<long double>(1 << level);
    const int kmax = static_cast<int>(7.0L / h);
    LongComplex sum{};
    for (int k = -kmax; k <= kmax; ++k) {
      if (level > 0 && k % 2 == 0) continue;  // even nodes already counted
      const long double t = h * static_cast<long double>(k);
      const long double u = kPi * std::sinh(t);
      long double s, one_minus;
      if (u >= 0.0L) {
        const long double e = std::exp(-u);
        s = length / (1.0L + e);
        one_minus = length * e / (1.0L + e);
      } else {
        const long double e = std::exp(u);
        s = length * e / (1.0L + e);
        one_minus = length / (1.0L + e);
      }
      const long double weight = kPi * std::cosh(t) * s * one_minus / length;
      if (weight < 1e-24L || s <= 0.0L || s >= length) continue;
      sum += weight * f(s);
    }
    total = (level == 0) ? h * sum : 0.5L * previous + h * sum;
    if (level >= 3 && std::abs(total - previous) < 1e-19L * (1.0L + std::abs(total))) break;
    previous = total;
  }
  return total;
}

LongComplex hankel0_first_ld(long double z) {
  const long double q = z * z / 4.0L;
  long double j0 = 1.0L;
  long double y_sum = 0.0L;
  long double term = 1.0L;
  long double harmonic = 0.0L;
  for (int m = 1; m <= 60; ++m) {
    term *= -q / (static_cast<long double>(m) * static_cast<long double>(m));
    harmonic += 1.0L / static_cast<long double>(m);
    j0 += term;
    y_sum -= term * harmonic;
    if (std::abs(term) < 1e-24L) break;
  }
  const long double y0 = (2.0L / kPi) * ((std::log(z / 2.0L) + kEulerGamma) * j0 + y_sum);
  return LongComplex(j0, y0);
}

ReferenceValues compute_reference_values() {
  // integrands expressed in the distance coordinate s = x - singular point
  const auto i1 = integrate_left_singular(
      [](long double s) { return LongComplex(std::sin(s - 1.0L) + std::exp(s - 1.0L) * std::log(s), 0.0L); }, 2.0L);
  const auto i2_m1 = integrate_left_singular([](long double s) { return hankel0_first_ld(s); }, 2.0L);
  const auto i2_q = integrate_left_singular([](long double s) { return hankel0_first_ld(s); }, 1.25L) +
                    integrate_left_singular([](long double s) { return hankel0_first_ld(s); }, 0.75L);

  ReferenceValues values;
  values.i1 = Complex(static_cast<double>(i1.real()), static_cast<double>(i1.imag()));
  values.i2_minus1 = Complex(static_cast<double>(i2_m1.real()), static_cast<double>(i2_m1.imag()));
  values.i2_quarter = Complex(static_cast<double>(i2_q.real()), static_cast<double>(i2_q.imag()));
  return values;
}

}  // namespace logcheb::reference
