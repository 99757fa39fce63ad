#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "experiments.hpp"
#include "logcheb/functions.hpp"
#include "logcheb/loginterp.hpp"
#include "logcheb/quadrature.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    values.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// "start:end:step" inclusive of both ends up to rounding
std::vector<double> parse_alpha_grid(const std::string& text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = text.find(':', c1 == std::string::npos ? std::string::npos : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("expected start:end:step");
  const double start = std::stod(text.substr(0, c1));
  const double end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(text.substr(c2 + 1));
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double a = start + step * i;
    if (a > end + 0.5 * step) break;
    grid.push_back(std::min(a, end));
  }
  return grid;
}

void resolve_sizes(int n, int* n1, int n2) {
  if (n > 0) {
    if (n <= n2) throw std::invalid_argument("need n > n2");
    *n1 = n - n2;
  }
  if (*n1 < 0 || *n1 + n2 < 1) throw std::invalid_argument("need n1 + n2 >= 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fast interpolation and quadrature for log-singular functions"};
  app.require_subcommand(1);

  // table
  int table_id = 1;
  std::string table_format = "csv", table_out;
  CLI::App* table = app.add_subcommand("table", "reproduce experiment table 1-8");
  table->add_option("id", table_id, "table id")->required()->check(CLI::Range(1, 8));
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "output path (default stdout)");

  // alpha-sweep
  std::string sweep_ns = "8,16,32", sweep_alphas = "-1:1:0.05", sweep_format = "csv", sweep_out;
  int sweep_n2 = 2;
  bool sweep_split = false;
  CLI::App* sweep = app.add_subcommand("alpha-sweep", "interpolation error of k1 over a grid of singular points");
  sweep->add_option("--n", sweep_ns, "comma-separated point counts");
  sweep->add_option("--n2", sweep_n2, "log-basis size")->check(CLI::NonNegativeNumber);
  sweep->add_option("--alphas", sweep_alphas, "grid start:end:step");
  sweep->add_flag("--split", sweep_split, "divide the domain at alpha first");
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sweep_out);

  // fit
  std::string fit_fn, fit_out;
  double fit_alpha = -1.0;
  int fit_n1 = -1, fit_n2 = 0, fit_n = 0;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a corpus function, print the interpolant as JSON");
  fit_cmd->add_option("function", fit_fn, "corpus function name")->required();
  fit_cmd->add_option("--alpha", fit_alpha, "singular point");
  fit_cmd->add_option("--n1", fit_n1, "polynomial basis size");
  fit_cmd->add_option("--n2", fit_n2, "log basis size");
  fit_cmd->add_option("--n", fit_n, "total points (alternative to --n1)");
  fit_cmd->add_option("--out", fit_out);

  // quad
  std::string quad_fn, quad_out;
  double quad_alpha = -1.0;
  int quad_n1 = -1, quad_n2 = 0, quad_n = 0;
  bool quad_split = false;
  CLI::App* quad_cmd = app.add_subcommand("quad", "integrate a corpus function, print the result as JSON");
  quad_cmd->add_option("function", quad_fn, "corpus function name")->required();
  quad_cmd->add_option("--alpha", quad_alpha, "singular point");
  quad_cmd->add_option("--n1", quad_n1, "polynomial basis size");
  quad_cmd->add_option("--n2", quad_n2, "log basis size");
  quad_cmd->add_option("--n", quad_n, "total points (alternative to --n1)");
  quad_cmd->add_flag("--split", quad_split, "split the domain at alpha");
  quad_cmd->add_option("--out", quad_out);

  // gen-fixtures
  std::string fixtures_out;
  CLI::App* gen = app.add_subcommand("gen-fixtures", "emit the high-precision reference values");
  gen->add_option("--out", fixtures_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) {
      const logcheb::bench::ErrorReport report = logcheb::bench::run_table(table_id);
      write_output(table_format == "json" ? to_json(report) : to_csv(report), table_out);
    } else if (*sweep) {
      const logcheb::bench::ErrorReport report =
          logcheb::bench::run_alpha_sweep(parse_int_list(sweep_ns), sweep_n2, parse_alpha_grid(sweep_alphas),
                                          sweep_split);
      write_output(sweep_format == "json" ? to_json(report) : to_csv(report), sweep_out);
    } else if (*fit_cmd) {
      resolve_sizes(fit_n, &fit_n1, fit_n2);
      const auto f = logcheb::corpus_callable(fit_fn, fit_alpha);
      const logcheb::SingularInterpolant interp = logcheb::fit(f, fit_alpha, fit_n1, fit_n2);
      write_output(logcheb::to_json(interp) + "\n", fit_out);
    } else if (*quad_cmd) {
      resolve_sizes(quad_n, &quad_n1, quad_n2);
      const auto f = logcheb::corpus_callable(quad_fn, quad_alpha);
      const logcheb::QuadratureResult result =
          quad_split ? logcheb::split_integrate(f, quad_alpha, quad_n1, quad_n2)
                     : logcheb::integrate_singular(f, quad_alpha, quad_n1, quad_n2);
      nlohmann::json j;
      j["function"] = quad_fn;
      j["alpha"] = quad_alpha;
      j["split"] = quad_split;
      j["value"] = {result.value.real(), result.value.imag()};
      j["n1"] = result.n1;
      j["n2"] = result.n2;
      j["function_evals"] = result.function_evals;
      j["elapsed_seconds"] = result.elapsed_seconds;
      write_output(j.dump(2) + "\n", quad_out);
    } else if (*gen) {
      write_output(logcheb::bench::fixtures_json(), fixtures_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
