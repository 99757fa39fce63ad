#include <random>

#include <benchmark/benchmark.h>

#include "logcheb/functions.hpp"
#include "logcheb/loginterp.hpp"
#include "logcheb/moments.hpp"
#include "logcheb/quadrature.hpp"
#include "logcheb/transforms.hpp"

namespace {

logcheb::RealVector random_vector(int n) {
  std::mt19937 rng(1234);
  std::normal_distribution<double> dist;
  logcheb::RealVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = dist(rng);
  return v;
}

void BM_dct2(benchmark::State& state) {
  const logcheb::RealVector u = random_vector(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = logcheb::dct2(std::span<const double>(u));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_dct2)->Arg(256)->Arg(4096)->Arg(65536)->Arg(1000);  // last one exercises the chirp-z path

void BM_dct3(benchmark::State& state) {
  const logcheb::RealVector v = random_vector(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = logcheb::dct3(std::span<const double>(v));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_dct3)->Arg(256)->Arg(4096)->Arg(65536);

void BM_fit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k1f = logcheb::corpus_callable("k1", -1.0);
  for (auto _ : state) {
    auto interp = logcheb::fit(k1f, -1.0, n - 3, 3);
    benchmark::DoNotOptimize(interp);
  }
}
BENCHMARK(BM_fit)->Arg(32)->Arg(256)->Arg(4096)->Arg(32768);

void BM_integrate_singular(benchmark::State& state) {
  const auto k1f = logcheb::corpus_callable("k1", -1.0);
  for (auto _ : state) {
    auto q = logcheb::integrate_singular(k1f, -1.0, 29, 3);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_integrate_singular);

void BM_graded_baseline(benchmark::State& state) {
  const auto k1f = logcheb::corpus_callable("k1", -1.0);
  for (auto _ : state) {
    auto v = logcheb::graded_fejer(k1f, 32, 4, 4.0, -1.0, 1.0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_graded_baseline);

void BM_log_moments(benchmark::State& state) {
  for (auto _ : state) {
    auto xi2 = logcheb::xi2_table(-0.5, 64);
    benchmark::DoNotOptimize(xi2);
  }
}
BENCHMARK(BM_log_moments);

void BM_hallen_kernel(benchmark::State& state) {
  const double x = -1.0 + 1e-6;
  for (auto _ : state) {
    auto v = logcheb::hallen_k3(x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_hallen_kernel);

}  // namespace

BENCHMARK_MAIN();
