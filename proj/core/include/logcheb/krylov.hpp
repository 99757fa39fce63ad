#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logcheb/types.hpp"

namespace logcheb {

// Matrix-free square operator: apply maps a length-m vector to a length-m
// vector and must be linear.
template <typename Scalar>
struct LinearMap {
  int dimension = 0;
  std::function<std::vector<Scalar>(std::span<const Scalar>)> apply;
};

struct SolveStats {
  int iterations = 0;
  double final_residual = 0.0;  // absolute 2-norm of the residual
  bool converged = false;
  std::vector<double> residual_history;  // one entry per Arnoldi step
};

namespace detail {

inline double conj_scalar(double x) { return x; }
inline Complex conj_scalar(const Complex& z) { return std::conj(z); }

template <typename Scalar>
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += conj_scalar(a[i]) * b[i];
  return s;
}

template <typename Scalar>
double norm2(std::span<const Scalar> a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(Complex(x));
  return std::sqrt(s);
}

}  // namespace detail

// Full (unrestarted) GMRES with modified Gram-Schmidt and one
// reorthogonalization pass. Convergence is declared when the residual norm
// drops below tol * ||rhs||. maxit <= 0 selects max(2m, 50); the Arnoldi
// process is capped at m steps regardless, since the Krylov space is then
// exhausted. On breakdown with a nonzero residual the operator is reported
// singular. If the iteration budget runs out, the best iterate is returned
// with converged=false.
template <typename Scalar>
std::pair<std::vector<Scalar>, SolveStats> gmres(const LinearMap<Scalar>& op, std::span<const Scalar> rhs,
                                                 double tol = 1e-14, int maxit = 0) {
  const int m = op.dimension;
  if (m < 1) throw std::invalid_argument("operator dimension must be positive");
  if (static_cast<int>(rhs.size()) != m) throw std::invalid_argument("rhs size mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (maxit <= 0) maxit = std::max(2 * m, 50);
  const int steps = std::min(maxit, m);

  SolveStats stats;
  std::vector<Scalar> x(static_cast<std::size_t>(m), Scalar{});
  const double beta = detail::norm2(rhs);
  if (beta == 0.0) {
    stats.converged = true;
    return {x, stats};
  }
  const double target = tol * beta;

  std::vector<std::vector<Scalar>> basis;
  basis.reserve(static_cast<std::size_t>(steps) + 1);
  {
    std::vector<Scalar> v0(rhs.begin(), rhs.end());
    for (auto& e : v0) e /= beta;
    basis.push_back(std::move(v0));
  }

  // column-major Hessenberg, transformed on the fly by Givens rotations
  std::vector<std::vector<Scalar>> hess;
  std::vector<Scalar> rot_u;   // conj(diagonal)/r per rotation
  std::vector<Scalar> rot_v;   // subdiagonal/r per rotation
  std::vector<Scalar> g(static_cast<std::size_t>(steps) + 1, Scalar{});
  g[0] = Scalar(beta);

  double residual = beta;
  int j = 0;
  for (; j < steps; ++j) {
    std::vector<Scalar> w = op.apply(basis[static_cast<std::size_t>(j)]);
    if (static_cast<int>(w.size()) != m) throw std::invalid_argument("operator returned wrong size");
    const double w_scale = detail::norm2<Scalar>(w);

    std::vector<Scalar> h(static_cast<std::size_t>(j) + 2, Scalar{});
    for (int i = 0; i <= j; ++i) {
      const Scalar hij = detail::dot<Scalar>(basis[static_cast<std::size_t>(i)], w);
      h[static_cast<std::size_t>(i)] = hij;
      for (int r = 0; r < m; ++r) w[static_cast<std::size_t>(r)] -= hij * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    }
    for (int i = 0; i <= j; ++i) {  // one reorthogonalization pass
      const Scalar d = detail::dot<Scalar>(basis[static_cast<std::size_t>(i)], w);
      h[static_cast<std::size_t>(i)] += d;
      for (int r = 0; r < m; ++r) w[static_cast<std::size_t>(r)] -= d * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    }
    const double hnext = detail::norm2<Scalar>(w);
    h[static_cast<std::size_t>(j) + 1] = Scalar(hnext);

    // previously computed rotations
    for (int i = 0; i < j; ++i) {
      const Scalar top = rot_u[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)] +
                         rot_v[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i) + 1];
      const Scalar bot = -rot_v[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)] +
                         detail::conj_scalar(rot_u[static_cast<std::size_t>(i)]) * h[static_cast<std::size_t>(i) + 1];
      h[static_cast<std::size_t>(i)] = top;
      h[static_cast<std::size_t>(i) + 1] = bot;
    }

    // new rotation eliminating the subdiagonal
    {
      const Scalar a = h[static_cast<std::size_t>(j)];
      const double anorm = std::abs(Complex(a));
      const double r = std::hypot(anorm, hnext);
      Scalar u, v;
      if (r == 0.0) {
        u = Scalar(1.0);
        v = Scalar{};
      } else if (anorm == 0.0) {
        u = Scalar{};
        v = Scalar(1.0);
      } else {
        u = detail::conj_scalar(a) / r;
        v = Scalar(hnext / r);
      }
      rot_u.push_back(u);
      rot_v.push_back(v);
      h[static_cast<std::size_t>(j)] = u * a + v * Scalar(hnext);
      const Scalar gtop = u * g[static_cast<std::size_t>(j)];
      const Scalar gbot = -v * g[static_cast<std::size_t>(j)];
      g[static_cast<std::size_t>(j)] = gtop;
      g[static_cast<std::size_t>(j) + 1] = gbot;
    }

    hess.push_back(std::move(h));
    residual = std::abs(Complex(g[static_cast<std::size_t>(j) + 1]));
    stats.residual_history.push_back(residual);
    ++stats.iterations;

    if (residual <= target) {
      ++j;
      break;
    }
    if (hnext <= 1e-14 * std::max(1.0, w_scale)) {
      // Krylov space exhausted before reaching the tolerance
      throw std::runtime_error("operator singular or numerically degenerate");
    }
    for (auto& e : w) e /= hnext;
    basis.push_back(std::move(w));
  }

  // back substitution on the triangularized Hessenberg
  const int k = static_cast<int>(hess.size());
  std::vector<Scalar> y(static_cast<std::size_t>(k), Scalar{});
  for (int i = k - 1; i >= 0; --i) {
    Scalar s = g[static_cast<std::size_t>(i)];
    for (int l = i + 1; l < k; ++l) s -= hess[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(l)];
    const Scalar d = hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (std::abs(Complex(d)) == 0.0) throw std::runtime_error("operator singular or numerically degenerate");
    y[static_cast<std::size_t>(i)] = s / d;
  }
  for (int i = 0; i < k; ++i)
    for (int r = 0; r < m; ++r) x[static_cast<std::size_t>(r)] += y[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];

  stats.final_residual = residual;
  stats.converged = residual <= target;
  return {x, stats};
}

// Direct dense solve behind the same interface: materializes the operator
// column by column and runs an LU factorization with partial pivoting.
// Intended as the slow reference path.
template <typename Scalar>
std::vector<Scalar> dense_solve(const LinearMap<Scalar>& op, std::span<const Scalar> rhs) {
  const int m = op.dimension;
  if (m < 1) throw std::invalid_argument("operator dimension must be positive");
  if (static_cast<int>(rhs.size()) != m) throw std::invalid_argument("rhs size mismatch");

  std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(m)));
  std::vector<Scalar> unit(static_cast<std::size_t>(m), Scalar{});
  for (int c = 0; c < m; ++c) {
    unit[static_cast<std::size_t>(c)] = Scalar(1.0);
    const std::vector<Scalar> col = op.apply(unit);
    unit[static_cast<std::size_t>(c)] = Scalar{};
    for (int r = 0; r < m; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = col[static_cast<std::size_t>(r)];
  }

  std::vector<Scalar> x(rhs.begin(), rhs.end());
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(Complex(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) >
          std::abs(Complex(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)])))
        piv = r;
    if (std::abs(Complex(a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)])) == 0.0)
      throw std::runtime_error("operator singular or numerically degenerate");
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(c)]);
    std::swap(x[static_cast<std::size_t>(piv)], x[static_cast<std::size_t>(c)]);
    for (int r = c + 1; r < m; ++r) {
      const Scalar f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      if (std::abs(Complex(f)) == 0.0) continue;
      for (int cc = c; cc < m; ++cc)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -= f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)];
      x[static_cast<std::size_t>(r)] -= f * x[static_cast<std::size_t>(c)];
    }
  }
  for (int r = m - 1; r >= 0; --r) {
    Scalar s = x[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < m; ++c) s -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = s / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return x;
}

}  // namespace logcheb
