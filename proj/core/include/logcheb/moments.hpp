#pragma once

#include "logcheb/types.hpp"

namespace logcheb {

// Chebyshev moments over [-1,1]:
//   xi1[k]  = integral of T_k(x) dx            (closed form)
//   eta[k]  = integral of U_k(x) log|x-alpha| dx   (three-term recurrence)
//   xi2[k]  = integral of T_k(x) log|x-alpha| dx   (assembled from eta)
//
// At alpha = +-1 the t*log(t) terms are replaced by their limit 0.
struct MomentTable {
  double alpha = 0.0;
  int n = 0;
  RealVector xi1;
  RealVector xi2;
  RealVector eta;  // retained for testing

  static MomentTable build(double alpha, int n);
};

double xi1(int k);
RealVector eta_table(double alpha, int n);
RealVector xi2_table(double alpha, int n);

}  // namespace logcheb
