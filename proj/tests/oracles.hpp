// Test-only reference machinery, kept independent of the library's fast
// paths: direct trigonometric Chebyshev evaluation, a dense LU fit of the
// full interpolation system, and an adaptive Gauss quadrature able to absorb
// endpoint log singularities through bisection.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracles {

inline double cheb_t(int k, double x) { return std::cos(k * std::acos(x)); }

inline std::vector<double> cheb_nodes(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * n));
  return x;
}

// dense LU with partial pivoting, complex
inline std::vector<std::complex<double>> lu_solve(std::vector<std::vector<std::complex<double>>> a,
                                                  std::vector<std::complex<double>> rhs) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) == 0.0) throw std::runtime_error("singular dense system");
    std::swap(a[piv], a[c]);
    std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(c)]);
    for (int r = c + 1; r < n; ++r) {
      const std::complex<double> f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(c)];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    std::complex<double> s = rhs[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * rhs[static_cast<std::size_t>(c)];
    rhs[static_cast<std::size_t>(r)] = s / a[r][r];
  }
  return rhs;
}

// full interpolation system solved densely: columns T_0..T_{n1-1}, then
// log|x-alpha| T_0..T_{n2-1}
struct DenseFit {
  std::vector<std::complex<double>> a, b;
};

inline DenseFit dense_fit(const std::vector<std::complex<double>>& samples, double alpha, int n1, int n2) {
  const int n = n1 + n2;
  const std::vector<double> x = cheb_nodes(n);
  std::vector<std::vector<std::complex<double>>> m(static_cast<std::size_t>(n),
                                                   std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    const double lw = std::log(std::abs(x[static_cast<std::size_t>(r)] - alpha));
    for (int c = 0; c < n1; ++c) m[r][c] = cheb_t(c, x[static_cast<std::size_t>(r)]);
    for (int c = 0; c < n2; ++c) m[r][n1 + c] = lw * cheb_t(c, x[static_cast<std::size_t>(r)]);
  }
  const auto coeffs = lu_solve(std::move(m), samples);
  DenseFit fit;
  fit.a.assign(coeffs.begin(), coeffs.begin() + n1);
  fit.b.assign(coeffs.begin() + n1, coeffs.end());
  return fit;
}

// dense reduced matrix (A_{n1+1:n})^T P A_{1:n2} from the defining sums
inline std::vector<std::vector<double>> dense_reduced_matrix(double alpha, int n1, int n2) {
  const int n = n1 + n2;
  const std::vector<double> x = cheb_nodes(n);
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n2), std::vector<double>(static_cast<std::size_t>(n2), 0.0));
  for (int r = 0; r < n2; ++r)
    for (int c = 0; c < n2; ++c)
      for (int j = 0; j < n; ++j)
        m[r][c] += cheb_t(n1 + r, x[static_cast<std::size_t>(j)]) *
                   std::log(std::abs(x[static_cast<std::size_t>(j)] - alpha)) * cheb_t(c, x[static_cast<std::size_t>(j)]);
  return m;
}

// 15-point Gauss-Legendre nodes/weights by Newton iteration
struct GaussRule {
  std::vector<double> nodes, weights;
};

inline const GaussRule& gauss15() {
  static const GaussRule rule = [] {
    constexpr int n = 15;
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.nodes[static_cast<std::size_t>(i)] = -x;
      r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
      r.weights[static_cast<std::size_t>(i)] = r.weights[static_cast<std::size_t>(n - 1 - i)] =
          2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

inline double gauss15_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& rule = gauss15();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s;
}

// Adaptive bisection with a one-panel vs two-panel estimate. Endpoint
// singularities are never evaluated (nodes are interior) and the depth cap
// bounds their leftover at ~2^-50 * |log width|.
inline double adaptive_gauss(const std::function<double(double)>& f, double a, double b, double tol) {
  struct Worker {
    const std::function<double(double)>& f;
    double tol_per_width;
    double recurse(double a, double b, double whole, int depth) const {
      const double mid = 0.5 * (a + b);
      const double left = gauss15_panel(f, a, mid);
      const double right = gauss15_panel(f, mid, b);
      const double est = std::abs(whole - left - right);
      if (depth >= 52 || est < tol_per_width * (b - a)) return left + right;
      return recurse(a, mid, left, depth + 1) + recurse(mid, b, right, depth + 1);
    }
  };
  if (!(b > a)) return 0.0;
  const Worker w{f, tol / (b - a)};
  return w.recurse(a, b, gauss15_panel(f, a, b), 0);
}

// integral of T_k(x) log|x - alpha| over [-1,1], split at the singularity.
// Each side is integrated in the distance coordinate s = |x - alpha| so the
// log argument keeps full relative accuracy under deep bisection.
inline double log_moment(int k, double alpha, double tol = 1e-13) {
  double total = 0.0;
  if (alpha > -1.0) {  // left side, x = alpha - s
    const auto f = [k, alpha](double s) { return cheb_t(k, std::max(alpha - s, -1.0)) * std::log(s); };
    total += adaptive_gauss(f, 0.0, alpha + 1.0, tol);
  }
  if (alpha < 1.0) {  // right side, x = alpha + s
    const auto f = [k, alpha](double s) { return cheb_t(k, std::min(alpha + s, 1.0)) * std::log(s); };
    total += adaptive_gauss(f, 0.0, 1.0 - alpha, tol);
  }
  return total;
}

}  // namespace oracles
