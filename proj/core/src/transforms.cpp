#include "logcheb/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace logcheb {
namespace {

constexpr std::size_t kNaiveCutoff = 16;

void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty vector");
}

// Even-odd reordering that turns the length-n cosine sum into a length-n DFT
// (Makhoul): v[j] = u[2j] for the leading half, v[n-1-j] = u[2j+1] after it.
RealVector dct2_fast(std::span<const double> u) {
  const std::size_t n = u.size();
  std::vector<Complex> v(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t j = 0; j < half; ++j) v[j] = u[2 * j];
  for (std::size_t j = 0; j < n / 2; ++j) v[n - 1 - j] = u[2 * j + 1];

  detail::fft(v, false);

  RealVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = -std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    out[k] = (v[k] * Complex(std::cos(ang), std::sin(ang))).real();
  }
  return out;
}

RealVector dct3_fast(std::span<const double> c) {
  const std::size_t n = c.size();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = -std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    z[k] = c[k] * Complex(std::cos(ang), std::sin(ang));
  }

  detail::fft(z, false);

  RealVector out(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t j = 0; j < half; ++j) out[2 * j] = z[j].real();
  for (std::size_t j = 0; j < n / 2; ++j) out[2 * j + 1] = z[n - 1 - j].real();
  return out;
}

}  // namespace

RealVector dct2_naive(std::span<const double> u) {
  require_nonempty(u.size());
  const std::size_t n = u.size();
  RealVector out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      s += u[j] * std::cos(static_cast<double>(k) * (2.0 * static_cast<double>(j) + 1.0) * std::numbers::pi /
                           (2.0 * static_cast<double>(n)));
    out[k] = s;
  }
  return out;
}

RealVector dct3_naive(std::span<const double> v) {
  require_nonempty(v.size());
  const std::size_t n = v.size();
  RealVector out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      s += v[k] * std::cos(static_cast<double>(k) * (2.0 * static_cast<double>(j) + 1.0) * std::numbers::pi /
                           (2.0 * static_cast<double>(n)));
    out[j] = s;
  }
  return out;
}

RealVector dct2(std::span<const double> u) {
  require_nonempty(u.size());
  if (u.size() < kNaiveCutoff) return dct2_naive(u);
  return dct2_fast(u);
}

RealVector dct3(std::span<const double> v) {
  require_nonempty(v.size());
  if (v.size() < kNaiveCutoff) return dct3_naive(v);
  return dct3_fast(v);
}

namespace {

template <RealVector (*Transform)(std::span<const double>)>
ComplexVector split_transform(std::span<const Complex> u) {
  require_nonempty(u.size());
  const std::size_t n = u.size();
  RealVector re(n), im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = u[j].real();
    im[j] = u[j].imag();
  }
  const RealVector tre = Transform(re);
  const RealVector tim = Transform(im);
  ComplexVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = Complex(tre[j], tim[j]);
  return out;
}

}  // namespace

ComplexVector dct2(std::span<const Complex> u) { return split_transform<&dct2>(u); }

ComplexVector dct3(std::span<const Complex> v) { return split_transform<&dct3>(v); }

}  // namespace logcheb
