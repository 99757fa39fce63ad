#pragma once

#include <functional>
#include <string>
#include <vector>

#include "logcheb/types.hpp"

namespace logcheb {

// sin(x) + e^x log|x - alpha|
double k1(double x, double alpha);

// Smoothed companions of k1: the exponential factor has its first j Taylor
// terms about alpha removed, so the log term vanishes like (x-alpha)^j and
// s_j lies in H^j. At x = alpha the limit sin(alpha) is returned.
double s_smooth(int j, double x, double alpha);

// Hankel function of the first kind and order zero, J0(z) + i Y0(z), by the
// ascending series. Intended domain (0, 2], where the series converges to
// full double accuracy in under 20 terms.
Complex hankel0_first(double z);

// Azimuthal kernel integral
//   (1/pi) * integral over [0, pi/2] of exp(-2i beta R)/R dphi,
//   R = sqrt((x+1)^2 + sin^2 phi),
// log-singular in x at -1. The inner integral uses composite Gauss-Legendre
// on dyadic segments refined toward phi = 0 until the segment width falls
// below x+1, which keeps full accuracy however close x is to -1.
// inner_nodes is the per-segment rule size.
Complex hallen_k3(double x, double beta = 0.1, int inner_nodes = 64);

struct CorpusFunction {
  std::string name;
  double alpha;              // canonical singular point; NaN = follows the caller's alpha
  double beta = 0.0;         // k3 only
  std::function<Complex(double x, double alpha)> eval;
};

const std::vector<CorpusFunction>& corpus();

// Resolves a corpus name to a callable with the singular point bound.
// Throws std::invalid_argument for unknown names.
std::function<Complex(double)> corpus_callable(const std::string& name, double alpha);

}  // namespace logcheb
