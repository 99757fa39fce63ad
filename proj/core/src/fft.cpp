#include "fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace logcheb::detail {
namespace {

using Cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Iterative Cooley-Tukey, n a power of two. Twiddles are taken from a
// freshly tabulated quarter-free table so rounding does not accumulate
// across stages.
void fft_pow2(std::vector<Cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<Cplx> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    tw[k] = Cplx(std::cos(ang), std::sin(ang));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Cplx w = tw[k * stride];
        const Cplx u = a[i + k];
        const Cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

// Bluestein chirp-z: expresses a length-n DFT as a circular convolution of
// length m = next_pow2(2n-1). The chirp phase uses j^2 mod 2n to keep the
// trig argument small.
void fft_bluestein(std::vector<Cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;

  std::vector<Cplx> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t j2 = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    const double ang = sign * std::numbers::pi * static_cast<double>(j2) / static_cast<double>(n);
    chirp[j] = Cplx(std::cos(ang), std::sin(ang));
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<Cplx> p(m, Cplx(0.0, 0.0)), q(m, Cplx(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) p[j] = a[j] * chirp[j];
  q[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) q[j] = q[m - j] = std::conj(chirp[j]);

  fft_pow2(p, false);
  fft_pow2(q, false);
  for (std::size_t j = 0; j < m; ++j) p[j] *= q[j];
  fft_pow2(p, true);

  for (std::size_t j = 0; j < n; ++j) a[j] = p[j] * chirp[j];
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

}  // namespace

void fft(std::vector<Cplx>& a, bool inverse) {
  if (is_pow2(a.size()))
    fft_pow2(a, inverse);
  else
    fft_bluestein(a, inverse);
}

}  // namespace logcheb::detail
