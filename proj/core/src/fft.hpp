#pragma once

#include <complex>
#include <vector>

namespace logcheb::detail {

// In-place complex DFT of arbitrary length: radix-2 for powers of two,
// Bluestein's chirp-z reduction otherwise. inverse=true applies the
// conjugate transform with the 1/n factor.
void fft(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace logcheb::detail
