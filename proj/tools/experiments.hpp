#pragma once

#include <string>
#include <vector>

#include "logcheb/types.hpp"

namespace logcheb::bench {

struct ReportRow {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  double alpha = 0.0;
  std::string function;
  double error = 0.0;
  long function_evals = 0;
  double elapsed_seconds = 0.0;
};

struct ErrorReport {
  std::string experiment;
  std::string mode = "direct";  // "direct" or "split"
  double alpha = 0.0;
  std::string revision;
  std::string generated_at;  // excluded from determinism guarantees, like elapsed
  std::vector<ReportRow> rows;
};

// Reproduces experiment table <id> (1..8). Grid evaluation may run in
// parallel; the LOGCHEB_THREADS environment variable caps the worker count.
ErrorReport run_table(int id);

// L1 interpolation error of k1 per (n, alpha) over the sweep grid; with
// split=true the domain is divided at alpha first. Collision points are
// skipped with a note on stderr.
ErrorReport run_alpha_sweep(const std::vector<int>& ns, int n2, const std::vector<double>& alphas, bool split);

std::string to_csv(const ErrorReport& report);
std::string to_json(const ErrorReport& report);

// Reference integral values used by tables 2-4, 7 and 8, plus the fixture
// file round-trip used by `gen-fixtures`.
std::string fixtures_json();

}  // namespace logcheb::bench
