#pragma once

#include <complex>
#include <functional>

#include "logcheb/types.hpp"

namespace logcheb::reference {

using LongComplex = std::complex<long double>;

// Double-exponential (tanh-sinh) quadrature of f over (0, L], tolerating an
// integrable logarithmic singularity at 0. Nodes near 0 are computed in the
// distance coordinate directly, so f receives arguments accurate to full
// relative precision however small they are. Accumulation is long double;
// absolute accuracy is ~1e-16 for the integrands used here.
LongComplex integrate_left_singular(const std::function<LongComplex(long double)>& f, long double length);

// Long-double ascending-series Bessel evaluation, domain (0, 2].
LongComplex hankel0_first_ld(long double z);

// Reference values for the benchmark integrals, computed live by the oracle:
//   i1        = integral of sin(x) + e^x log(x+1)        over [-1,1]
//   i2_minus1 = integral of H0_1(x+1)                    over [-1,1]
//   i2_quarter= integral of H0_1(|x-1/4|)                over [-1,1]
struct ReferenceValues {
  Complex i1{};
  Complex i2_minus1{};
  Complex i2_quarter{};
};

ReferenceValues compute_reference_values();

}  // namespace logcheb::reference
