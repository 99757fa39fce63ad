#pragma once

#include <complex>
#include <vector>

namespace logcheb {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

}  // namespace logcheb
