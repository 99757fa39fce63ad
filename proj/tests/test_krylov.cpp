#include <cmath>
#include <random>

#include <doctest.h>

#include "logcheb/krylov.hpp"

using logcheb::Complex;
using logcheb::ComplexVector;
using logcheb::dense_solve;
using logcheb::gmres;
using logcheb::LinearMap;
using logcheb::RealVector;

namespace {

template <typename Scalar>
LinearMap<Scalar> from_matrix(std::vector<std::vector<Scalar>> m) {
  LinearMap<Scalar> op;
  op.dimension = static_cast<int>(m.size());
  op.apply = [m = std::move(m)](std::span<const Scalar> v) {
    std::vector<Scalar> out(v.size(), Scalar{});
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t c = 0; c < out.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
  };
  return op;
}

}  // namespace

TEST_CASE("identity converges in one iteration") {
  LinearMap<double> op;
  op.dimension = 5;
  op.apply = [](std::span<const double> v) { return RealVector(v.begin(), v.end()); };
  const RealVector rhs{1.0, -2.0, 3.0, 0.5, 0.0};
  const auto [x, stats] = gmres(op, std::span<const double>(rhs));
  CHECK(stats.converged);
  CHECK(stats.iterations == 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) CHECK(x[i] == doctest::Approx(rhs[i]));
}

TEST_CASE("diagonal system") {
  const auto op = from_matrix<double>({{2.0, 0.0}, {0.0, 3.0}});
  const RealVector rhs{2.0, 3.0};
  const auto [x, stats] = gmres(op, std::span<const double>(rhs));
  CHECK(stats.converged);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("random real system matches the dense direct solve") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<double>> m(8, std::vector<double>(8));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = dist(rng) + (r == c ? 4.0 : 0.0);
  const auto op = from_matrix(std::move(m));
  RealVector rhs(8);
  for (auto& v : rhs) v = dist(rng);
  const auto [x, stats] = gmres(op, std::span<const double>(rhs));
  const RealVector direct = dense_solve(op, std::span<const double>(rhs));
  CHECK(stats.converged);
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(x[static_cast<std::size_t>(i)] - direct[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("complex system matches the dense direct solve") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<Complex>> m(6, std::vector<Complex>(6));
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Complex(dist(rng), dist(rng)) + (r == c ? Complex(3.0, 1.0) : Complex{});
  const auto op = from_matrix(std::move(m));
  ComplexVector rhs(6);
  for (auto& v : rhs) v = Complex(dist(rng), dist(rng));
  const auto [x, stats] = gmres(op, std::span<const Complex>(rhs));
  const ComplexVector direct = dense_solve(op, std::span<const Complex>(rhs));
  CHECK(stats.converged);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(x[static_cast<std::size_t>(i)] - direct[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("residual history is non-increasing and termination happens within m steps") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int m = 1; m <= 12; ++m) {
    std::vector<std::vector<double>> mat(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = dist(rng) + (r == c ? 3.0 : 0.0);
    const auto op = from_matrix(std::move(mat));
    RealVector rhs(static_cast<std::size_t>(m));
    for (auto& v : rhs) v = dist(rng);
    const auto [x, stats] = gmres(op, std::span<const double>(rhs), 1e-13);
    CHECK(stats.converged);
    CHECK(stats.iterations <= m);
    for (std::size_t i = 1; i < stats.residual_history.size(); ++i)
      CHECK(stats.residual_history[i] <= stats.residual_history[i - 1] * (1.0 + 1e-12));
  }
}

TEST_CASE("zero operator with nonzero rhs reports a singular operator") {
  LinearMap<double> op;
  op.dimension = 4;
  op.apply = [](std::span<const double> v) { return RealVector(v.size(), 0.0); };
  const RealVector rhs{1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS((void)gmres(op, std::span<const double>(rhs)), std::runtime_error);
}

TEST_CASE("iteration budget exhaustion returns the best iterate unconverged") {
  // cyclic shift needs the full m steps; capping maxit below that must not
  // converge but still return the least-squares iterate
  const int m = 6;
  LinearMap<double> op;
  op.dimension = m;
  op.apply = [m](std::span<const double> v) {
    RealVector out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + 1) % m)];
    return out;
  };
  RealVector rhs(static_cast<std::size_t>(m), 0.0);
  rhs[0] = 1.0;
  const auto [x, stats] = gmres(op, std::span<const double>(rhs), 1e-14, 3);
  CHECK_FALSE(stats.converged);
  CHECK(stats.iterations == 3);
  const auto [x_full, stats_full] = gmres(op, std::span<const double>(rhs), 1e-14, m);
  CHECK(stats_full.converged);
}

TEST_CASE("zero rhs short-circuits") {
  const auto op = from_matrix<double>({{2.0, 1.0}, {0.0, 1.0}});
  const RealVector rhs{0.0, 0.0};
  const auto [x, stats] = gmres(op, std::span<const double>(rhs));
  CHECK(stats.converged);
  CHECK(stats.iterations == 0);
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 0.0);
}

TEST_CASE("operator linearity spot check") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<double>> m(5, std::vector<double>(5));
  for (auto& row : m)
    for (auto& v : row) v = dist(rng);
  const auto op = from_matrix(std::move(m));
  RealVector u(5), w(5);
  for (auto& v : u) v = dist(rng);
  for (auto& v : w) v = dist(rng);
  RealVector mix(5);
  for (int i = 0; i < 5; ++i) mix[static_cast<std::size_t>(i)] = 2.0 * u[static_cast<std::size_t>(i)] - 0.5 * w[static_cast<std::size_t>(i)];
  const RealVector au = op.apply(std::span<const double>(u));
  const RealVector aw = op.apply(std::span<const double>(w));
  const RealVector amix = op.apply(std::span<const double>(mix));
  for (int i = 0; i < 5; ++i)
    CHECK(amix[static_cast<std::size_t>(i)] ==
          doctest::Approx(2.0 * au[static_cast<std::size_t>(i)] - 0.5 * aw[static_cast<std::size_t>(i)]));
}
