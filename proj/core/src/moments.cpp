#include "logcheb/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace logcheb {
namespace {

// t*log(t) extended by its limit 0 at t = 0
double xlogx(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

void require_alpha(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) throw std::domain_error("alpha outside [-1, 1]");
}

}  // namespace

double xi1(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  if (k % 2 != 0) return 0.0;
  return 2.0 / (1.0 - static_cast<double>(k) * static_cast<double>(k));
}

RealVector eta_table(double alpha, int n) {
  require_alpha(alpha);
  if (n < 1) throw std::invalid_argument("table size must be positive");

  const double mlog = xlogx(1.0 - alpha);  // (1-a)log(1-a)
  const double plog = xlogx(1.0 + alpha);  // (1+a)log(1+a)

  RealVector eta(static_cast<std::size_t>(n));
  eta[0] = mlog + plog - 2.0;
  double em2 = 0.0;  // eta_{-1} convention
  double em1 = eta[0];
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double gamma = (k % 2 == 0)
                             ? 2.0 / (kk + 1.0) * (mlog + plog + 2.0 / (kk * kk - 1.0))
                             : 2.0 / (kk + 1.0) * (mlog - plog);
    const double ek = (2.0 * alpha * kk / (kk + 1.0)) * em1 - ((kk - 1.0) / (kk + 1.0)) * em2 + gamma;
    eta[static_cast<std::size_t>(k)] = ek;
    em2 = em1;
    em1 = ek;
  }
  return eta;
}

RealVector xi2_table(double alpha, int n) {
  const RealVector eta = eta_table(alpha, n);
  RealVector xi2(static_cast<std::size_t>(n));
  xi2[0] = eta[0];
  if (n > 1) xi2[1] = eta[1] / 2.0;
  for (int k = 2; k < n; ++k)
    xi2[static_cast<std::size_t>(k)] = (eta[static_cast<std::size_t>(k)] - eta[static_cast<std::size_t>(k - 2)]) / 2.0;
  return xi2;
}

MomentTable MomentTable::build(double alpha, int n) {
  MomentTable t;
  t.alpha = alpha;
  t.n = n;
  t.eta = eta_table(alpha, n);
  t.xi2.resize(static_cast<std::size_t>(n));
  t.xi2[0] = t.eta[0];
  if (n > 1) t.xi2[1] = t.eta[1] / 2.0;
  for (int k = 2; k < n; ++k)
    t.xi2[static_cast<std::size_t>(k)] = (t.eta[static_cast<std::size_t>(k)] - t.eta[static_cast<std::size_t>(k - 2)]) / 2.0;
  t.xi1.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) t.xi1[static_cast<std::size_t>(k)] = logcheb::xi1(k);
  return t;
}

}  // namespace logcheb
