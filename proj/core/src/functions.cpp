#include "logcheb/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace logcheb {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;  // 20 digits

struct GaussRule {
  RealVector nodes;    // on (-1, 1)
  RealVector weights;
};

// Gauss-Legendre nodes by Newton iteration on the recurrence-evaluated P_n.
GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const GaussRule& cached_gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

double taylor_residue(int j, double x, double alpha) {
  const double ea = std::exp(alpha);
  double t = std::exp(x) - ea;
  if (j >= 2) t -= ea * (x - alpha);
  if (j >= 3) t -= ea * (x - alpha) * (x - alpha) / 2.0;
  return t;
}

}  // namespace

double k1(double x, double alpha) {
  if (x == alpha) throw std::domain_error("evaluation at singular point");
  return std::sin(x) + std::exp(x) * std::log(std::abs(x - alpha));
}

double s_smooth(int j, double x, double alpha) {
  if (j < 1 || j > 3) throw std::invalid_argument("smoothness index must be 1, 2 or 3");
  if (x == alpha) return std::sin(alpha);  // the residue * log term vanishes in the limit
  return std::sin(x) + taylor_residue(j, x, alpha) * std::log(std::abs(x - alpha));
}

Complex hankel0_first(double z) {
  if (!(z > 0.0)) throw std::domain_error("argument must be positive");
  const double q = z * z / 4.0;

  // J0 = sum (-q)^m / (m!)^2; the Y0 sum carries the harmonic numbers.
  double j0 = 1.0;
  double y_sum = 0.0;
  double term = 1.0;
  double harmonic = 0.0;
  for (int m = 1; m <= 40; ++m) {
    term *= -q / (static_cast<double>(m) * static_cast<double>(m));
    harmonic += 1.0 / static_cast<double>(m);
    j0 += term;
    y_sum -= term * harmonic;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(j0))) break;
  }
  const double y0 = (2.0 / std::numbers::pi) * ((std::log(z / 2.0) + kEulerGamma) * j0 + y_sum);
  return Complex(j0, y0);
}

Complex hallen_k3(double x, double beta, int inner_nodes) {
  if (!(x > -1.0)) throw std::domain_error("evaluation at singular point");
  if (inner_nodes < 2) throw std::invalid_argument("inner rule needs at least 2 nodes");
  const double eps = x + 1.0;
  const GaussRule& rule = cached_gauss_legendre(inner_nodes);

  // dyadic breakpoints pi/2, pi/4, ... down to the eps scale
  Complex total{};
  double hi = std::numbers::pi / 2.0;
  for (int level = 0; level < 64; ++level) {
    const double lo = (hi <= eps || hi < 1e-17) ? 0.0 : hi / 2.0;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Complex acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double phi = mid + half * rule.nodes[i];
      const double s = std::sin(phi);
      const double r = std::sqrt(eps * eps + s * s);
      acc += rule.weights[i] * std::polar(1.0, -2.0 * beta * r) / r;
    }
    total += half * acc;
    if (lo == 0.0) break;
    hi = lo;
  }
  return total / std::numbers::pi;
}

const std::vector<CorpusFunction>& corpus() {
  static const double follows = std::numeric_limits<double>::quiet_NaN();
  static const std::vector<CorpusFunction> table = {
      {"const", follows, 0.0, [](double, double) { return Complex(1.0, 0.0); }},
      {"log", follows, 0.0,
       [](double x, double alpha) { return Complex(std::log(std::abs(x - alpha)), 0.0); }},
      {"k1", follows, 0.0, [](double x, double alpha) { return Complex(k1(x, alpha), 0.0); }},
      {"s1", follows, 0.0, [](double x, double alpha) { return Complex(s_smooth(1, x, alpha), 0.0); }},
      {"s2", follows, 0.0, [](double x, double alpha) { return Complex(s_smooth(2, x, alpha), 0.0); }},
      {"s3", follows, 0.0, [](double x, double alpha) { return Complex(s_smooth(3, x, alpha), 0.0); }},
      {"k2", -1.0, 0.0, [](double x, double) { return hankel0_first(x + 1.0); }},
      {"k3", -1.0, 0.1, [](double x, double) { return hallen_k3(x); }},
      {"i2", follows, 0.0, [](double x, double alpha) { return hankel0_first(std::abs(x - alpha)); }},
  };
  return table;
}

std::function<Complex(double)> corpus_callable(const std::string& name, double alpha) {
  for (const CorpusFunction& fn : corpus()) {
    if (fn.name != name) continue;
    const auto eval = fn.eval;
    return [eval, alpha](double x) { return eval(x, alpha); };
  }
  throw std::invalid_argument("unknown corpus function: " + name);
}

}  // namespace logcheb
