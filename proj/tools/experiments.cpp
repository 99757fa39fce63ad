#include "experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "logcheb/chebyshev.hpp"
#include "logcheb/functions.hpp"
#include "logcheb/loginterp.hpp"
#include "logcheb/quadrature.hpp"
#include "logcheb/reference_oracle.hpp"

#ifndef LOGCHEB_REVISION
#define LOGCHEB_REVISION "unknown"
#endif

namespace logcheb::bench {
namespace {

using Fn = std::function<Complex(double)>;
using Clock = std::chrono::steady_clock;

const int kTableNs[4] = {4, 8, 16, 32};

int thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("LOGCHEB_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) cap = std::min(cap, requested);
  }
  return cap;
}

// evaluates work(i) for i in [0, count) on up to thread_cap() workers;
// results must be written into pre-sized slots so assembly stays ordered
void parallel_rows(int count, const std::function<void(int)>& work) {
  const int workers = std::min(count, thread_cap());
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&next, count, &work] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

ErrorReport make_report(std::string experiment, double alpha) {
  ErrorReport report;
  report.experiment = std::move(experiment);
  report.alpha = alpha;
  report.revision = LOGCHEB_REVISION;
  report.generated_at = timestamp_utc();
  return report;
}

double interp_l1(const Fn& f, double alpha, int n1, int n2, double* elapsed) {
  const auto t0 = Clock::now();
  const SingularInterpolant interp = fit(f, alpha, n1, n2);
  if (elapsed) *elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  return l1_error(f, [&interp](double x) { return evaluate(interp, x); }, alpha);
}

double interp_max(const Fn& f, double alpha, int n1, int n2, double* elapsed) {
  const auto t0 = Clock::now();
  const SingularInterpolant interp = fit(f, alpha, n1, n2);
  if (elapsed) *elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  return max_error(f, [&interp](double x) { return evaluate(interp, x); });
}

// the split interpolation error: each half mapped onto [-1,1] with the
// singularity at the left end and fitted with its own n points
double split_interp_l1(const Fn& f, double alpha, int n1, int n2) {
  const double c_left = (1.0 + alpha) / 2.0;
  const double c_right = (1.0 - alpha) / 2.0;
  const Fn left = [&f, alpha, c_left](double t) { return f(alpha - c_left * (t + 1.0)); };
  const Fn right = [&f, alpha, c_right](double t) { return f(alpha + c_right * (t + 1.0)); };
  return c_left * interp_l1(left, -1.0, n1, n2, nullptr) + c_right * interp_l1(right, -1.0, n1, n2, nullptr);
}

// graded-mesh composite baseline over [-1,1] with the singularity at an end
Complex graded_baseline(const Fn& f, int segments) { return graded_fejer(f, segments, 4, 4.0, -1.0, 1.0); }

// baseline for an interior singularity: split at alpha, grade each side
// toward it with the same segment count
Complex graded_baseline_split(const Fn& f, double alpha, int segments) {
  const Complex right = graded_fejer(f, segments, 4, 4.0, alpha, 1.0);
  const Fn mirrored = [&f, alpha](double s) { return f(alpha - (s - alpha)); };
  const Complex left = graded_fejer(mirrored, segments, 4, 4.0, alpha, alpha + (alpha + 1.0));
  return right + left;
}

// ---- table definitions ----------------------------------------------------

ErrorReport table_interp_k1_n2_small() {  // id 1
  ErrorReport report = make_report("table1", -1.0);
  const Fn k1f = corpus_callable("k1", -1.0);
  report.rows.resize(24);
  parallel_rows(24, [&](int idx) {
    const int n = kTableNs[idx / 6];
    const int j = (idx % 6) / 2 + 1;
    const bool smooth_column = (idx % 2) == 1;
    ReportRow row;
    row.n = n;
    row.alpha = -1.0;
    if (!smooth_column) {
      row.n1 = n - j;
      row.n2 = j;
      row.function = "K1";
      row.error = interp_l1(k1f, -1.0, row.n1, row.n2, &row.elapsed_seconds);
      row.function_evals = n;
    } else {
      row.n1 = n - j;
      row.n2 = 0;
      row.function = "S" + std::to_string(j);
      const Fn sj = corpus_callable("s" + std::to_string(j), -1.0);
      row.error = interp_max(sj, -1.0, row.n1, 0, &row.elapsed_seconds);
      row.function_evals = row.n1;
    }
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

ErrorReport table_interp_k1_n1_small() {  // id 5
  ErrorReport report = make_report("table5", -1.0);
  const Fn k1f = corpus_callable("k1", -1.0);
  report.rows.resize(12);
  parallel_rows(12, [&](int idx) {
    const int n = kTableNs[idx / 3];
    const int n1 = idx % 3 + 1;
    ReportRow row;
    row.n = n;
    row.n1 = n1;
    row.n2 = n - n1;
    row.alpha = -1.0;
    row.function = "K1";
    row.error = interp_l1(k1f, -1.0, row.n1, row.n2, &row.elapsed_seconds);
    row.function_evals = n;
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

ErrorReport table_interp_kernels() {  // id 6
  ErrorReport report = make_report("table6", -1.0);
  // kernel arguments are scaled onto the half width (0, 1]
  const Fn k2h = [](double x) { return hankel0_first((x + 1.0) / 2.0); };
  const Fn k3h = [](double x) { return hallen_k3((x - 1.0) / 2.0); };
  report.rows.resize(24);
  parallel_rows(24, [&](int idx) {
    const int n = kTableNs[idx / 6];
    const int n2 = (idx % 6) / 2 + 1;
    const bool second_kernel = (idx % 2) == 1;
    ReportRow row;
    row.n = n;
    row.n1 = n - n2;
    row.n2 = n2;
    row.alpha = -1.0;
    row.function = second_kernel ? "K3" : "K2";
    row.error = interp_l1(second_kernel ? k3h : k2h, -1.0, row.n1, row.n2, &row.elapsed_seconds);
    row.function_evals = n;
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

struct QuadTarget {
  std::string name;
  Fn integrand;
  double alpha;     // singular point of the integrand on [-1,1]
  bool split;       // interior singularity handled by the splitting transform
  Complex reference;
};

QuadTarget quad_target(int table_id) {
  const reference::ReferenceValues refs = reference::compute_reference_values();
  switch (table_id) {
    case 2:
    case 7:
      return {"I1", corpus_callable("k1", -1.0), -1.0, false, refs.i1};
    case 3:
    case 8:
      return {"I2(-1)", corpus_callable("i2", -1.0), -1.0, false, refs.i2_minus1};
    case 4:
      return {"I2(1/4)", corpus_callable("i2", 0.25), 0.25, true, refs.i2_quarter};
    default:
      throw std::invalid_argument("no quadrature target for this table");
  }
}

ErrorReport table_quadrature(int id) {  // ids 2, 3, 4
  const QuadTarget target = quad_target(id);
  ErrorReport report = make_report("table" + std::to_string(id), target.alpha);
  report.rows.resize(16);
  parallel_rows(16, [&](int idx) {
    const int n = kTableNs[idx / 4];
    const int col = idx % 4;
    ReportRow row;
    row.n = n;
    row.alpha = target.alpha;
    if (col < 3) {
      const int n2 = col + 1;
      row.n1 = n - n2;
      row.n2 = n2;
      row.function = target.name;
      const QuadratureResult q = target.split ? split_integrate(target.integrand, target.alpha, row.n1, n2)
                                              : integrate_singular(target.integrand, target.alpha, row.n1, n2);
      row.error = std::abs(q.value - target.reference);
      row.function_evals = q.function_evals;
      row.elapsed_seconds = q.elapsed_seconds;
    } else {
      row.function = "graded";
      const auto t0 = Clock::now();
      const Complex value = target.split ? graded_baseline_split(target.integrand, target.alpha, n)
                                         : graded_baseline(target.integrand, n);
      row.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      row.error = std::abs(value - target.reference);
      row.function_evals = 4L * n * (target.split ? 2 : 1);
    }
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

ErrorReport table_timing(int id) {  // ids 7, 8
  const QuadTarget target = quad_target(id);
  ErrorReport report = make_report("table" + std::to_string(id), target.alpha);
  const int pairs7[3][2] = {{256, 1}, {64, 2}, {32, 3}};
  const int pairs8[3][2] = {{32, 1}, {64, 2}, {32, 3}};
  const auto& pairs = (id == 7) ? pairs7 : pairs8;
  for (int c = 0; c < 4; ++c) {
    ReportRow row;
    row.alpha = target.alpha;
    if (c < 3) {
      row.n = pairs[c][0];
      row.n2 = pairs[c][1];
      row.n1 = row.n - row.n2;
      row.function = target.name;
      double best = 1e300;
      Complex value{};
      long evals = 0;
      for (int rep = 0; rep < 3; ++rep) {  // best-of-3 keeps the timing stable
        const QuadratureResult q = integrate_singular(target.integrand, target.alpha, row.n1, row.n2);
        best = std::min(best, q.elapsed_seconds);
        value = q.value;
        evals = q.function_evals;
      }
      row.error = std::abs(value - target.reference);
      row.function_evals = evals;
      row.elapsed_seconds = best;
    } else {
      row.n = 256;
      row.function = "graded";
      double best = 1e300;
      Complex value{};
      for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        value = graded_baseline(target.integrand, row.n);
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
      }
      row.error = std::abs(value - target.reference);
      row.function_evals = 4L * row.n;
      row.elapsed_seconds = best;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

ErrorReport run_table(int id) {
  switch (id) {
    case 1:
      return table_interp_k1_n2_small();
    case 2:
    case 3:
    case 4:
      return table_quadrature(id);
    case 5:
      return table_interp_k1_n1_small();
    case 6:
      return table_interp_kernels();
    case 7:
    case 8:
      return table_timing(id);
    default:
      throw std::invalid_argument("table id must be in 1..8");
  }
}

ErrorReport run_alpha_sweep(const std::vector<int>& ns, int n2, const std::vector<double>& alphas, bool split) {
  ErrorReport report = make_report("alpha-sweep", 0.0);
  report.mode = split ? "split" : "direct";

  struct Job {
    int n;
    double alpha;
  };
  std::vector<Job> jobs;
  for (const int n : ns) {
    for (const double alpha : alphas) {
      if (split && !(alpha > -1.0 && alpha < 1.0)) {
        std::cerr << "[logcheb] note: skipping alpha=" << alpha << " (split needs an interior point)\n";
        continue;
      }
      if (!split) {
        const ChebyshevGrid grid = cheb_points(n);
        bool collides = false;
        for (const double x : grid.points) collides = collides || std::abs(x - alpha) < 1e-12;
        if (collides) {
          std::cerr << "[logcheb] note: skipping alpha=" << alpha << " (collides with a grid point at n=" << n
                    << ")\n";
          continue;
        }
      }
      jobs.push_back({n, alpha});
    }
  }

  report.rows.resize(jobs.size());
  parallel_rows(static_cast<int>(jobs.size()), [&](int idx) {
    const Job job = jobs[static_cast<std::size_t>(idx)];
    const Fn f = corpus_callable("k1", job.alpha);
    ReportRow row;
    row.n = job.n;
    row.n1 = job.n - n2;
    row.n2 = n2;
    row.alpha = job.alpha;
    row.function = "K1";
    const auto t0 = Clock::now();
    row.error = split ? split_interp_l1(f, job.alpha, row.n1, n2) : interp_l1(f, job.alpha, row.n1, n2, nullptr);
    row.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    row.function_evals = (split ? 2L : 1L) * job.n;
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

std::string to_csv(const ErrorReport& report) {
  std::ostringstream out;
  out << "experiment,n,n1,n2,alpha,function,error,function_evals,elapsed_seconds\n";
  char buf[256];
  for (const ReportRow& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%.10g,%s,%.10e,%ld,%.3e\n", report.experiment.c_str(), row.n,
                  row.n1, row.n2, row.alpha, row.function.c_str(), row.error, row.function_evals,
                  row.elapsed_seconds);
    out << buf;
  }
  return out.str();
}

std::string to_json(const ErrorReport& report) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["mode"] = report.mode;
  j["alpha"] = report.alpha;
  j["revision"] = report.revision;
  j["generated_at"] = report.generated_at;
  j["rows"] = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    j["rows"].push_back({{"n", row.n},
                         {"n1", row.n1},
                         {"n2", row.n2},
                         {"alpha", row.alpha},
                         {"function", row.function},
                         {"error", row.error},
                         {"function_evals", row.function_evals},
                         {"elapsed_seconds", row.elapsed_seconds}});
  }
  return j.dump(2);
}

std::string fixtures_json() {
  const reference::ReferenceValues refs = reference::compute_reference_values();
  nlohmann::json j;
  j["generator"] = {{"method", "tanh-sinh double-exponential on the distance coordinate, long double accumulation"},
                    {"base_step", 0.5},
                    {"max_levels", 9},
                    {"target_accuracy", 1e-14}};
  j["values"] = {{"I1", {refs.i1.real(), refs.i1.imag()}},
                 {"I2_minus1", {refs.i2_minus1.real(), refs.i2_minus1.imag()}},
                 {"I2_quarter", {refs.i2_quarter.real(), refs.i2_quarter.imag()}}};
  return j.dump(2) + "\n";
}

}  // namespace logcheb::bench
