#include "logcheb/loginterp.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "logcheb/chebyshev.hpp"
#include "logcheb/krylov.hpp"
#include "logcheb/quadrature.hpp"
#include "logcheb/transforms.hpp"

namespace logcheb {
namespace {

constexpr double kCollisionTol = 1e-12;

// log|x_j - alpha| at the fit grid; rejects alpha sitting on a node
RealVector log_weights(const ChebyshevGrid& grid, double alpha) {
  RealVector w(grid.points.size());
  for (std::size_t j = 0; j < grid.points.size(); ++j) {
    const double d = std::abs(grid.points[j] - alpha);
    if (d < kCollisionTol) throw std::domain_error("singularity on grid");
    w[j] = std::log(d);
  }
  return w;
}

template <typename Scalar>
std::vector<Scalar> reduced_matvec_impl(std::span<const Scalar> u, const RealVector& logw, int n1, int n2) {
  const int n = n1 + n2;
  std::vector<Scalar> padded(static_cast<std::size_t>(n), Scalar{});
  for (int k = 0; k < n2; ++k) padded[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)];
  std::vector<Scalar> grid_vals = dct3(std::span<const Scalar>(padded));
  for (int j = 0; j < n; ++j) grid_vals[static_cast<std::size_t>(j)] *= logw[static_cast<std::size_t>(j)];
  std::vector<Scalar> coeffs = dct2(std::span<const Scalar>(grid_vals));
  return std::vector<Scalar>(coeffs.begin() + n1, coeffs.end());
}

void check_shapes(std::size_t nsamples, int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) throw std::invalid_argument("need n1 + n2 >= 1 with nonnegative parts");
  if (nsamples != static_cast<std::size_t>(n1 + n2)) throw std::invalid_argument("sample count must equal n1 + n2");
}

}  // namespace

ComplexVector reduced_matvec(std::span<const Complex> u, double alpha, int n1, int n2) {
  if (static_cast<int>(u.size()) != n2) throw std::invalid_argument("vector length must equal n2");
  const RealVector logw = log_weights(cheb_points(n1 + n2), alpha);
  return reduced_matvec_impl(u, logw, n1, n2);
}

RealVector reduced_matvec(std::span<const double> u, double alpha, int n1, int n2) {
  if (static_cast<int>(u.size()) != n2) throw std::invalid_argument("vector length must equal n2");
  const RealVector logw = log_weights(cheb_points(n1 + n2), alpha);
  return reduced_matvec_impl(u, logw, n1, n2);
}

SingularInterpolant fit(std::span<const Complex> samples, double alpha, int n1, int n2, const FitOptions& opts) {
  check_shapes(samples.size(), n1, n2);
  const int n = n1 + n2;
  const ChebyshevGrid grid = cheb_points(n);
  const RealVector logw = log_weights(grid, alpha);
  if (n2 > n1) {
    const std::string note = "[logcheb] warning: n2 > n1 (" + std::to_string(n2) + " > " + std::to_string(n1) +
                             "); the reduced system may be unstable\n";
    std::cerr << note;  // single write, keeps concurrent fits readable
  }

  SingularInterpolant out;
  out.alpha = alpha;
  out.n1 = n1;
  out.n2 = n2;

  const auto diag = [n](int k) { return k == 0 ? static_cast<double>(n) : static_cast<double>(n) / 2.0; };

  if (n2 > 0) {
    const ComplexVector proj = dct2(samples);
    const ComplexVector rhs(proj.begin() + n1, proj.end());

    LinearMap<Complex> op;
    op.dimension = n2;
    op.apply = [&logw, n1, n2](std::span<const Complex> u) { return reduced_matvec_impl(u, logw, n1, n2); };

    std::pair<ComplexVector, SolveStats> solved;
    try {
      solved = gmres(op, std::span<const Complex>(rhs), opts.gmres_tol, opts.gmres_maxit);
    } catch (const std::runtime_error&) {
      throw std::runtime_error("reduced system not solvable (check invertibility assumption)");
    }
    if (!solved.second.converged)
      throw std::runtime_error("reduced system not solvable (check invertibility assumption)");
    out.b = std::move(solved.first);
  }

  // polynomial coefficients from one more transform pair:
  // a_hat = D^{-1} A^T (k - P A b_hat)
  ComplexVector residue(samples.begin(), samples.end());
  if (n2 > 0) {
    ComplexVector padded(static_cast<std::size_t>(n), Complex{});
    for (int k = 0; k < n2; ++k) padded[static_cast<std::size_t>(k)] = out.b[static_cast<std::size_t>(k)];
    const ComplexVector log_part = dct3(std::span<const Complex>(padded));
    for (int j = 0; j < n; ++j)
      residue[static_cast<std::size_t>(j)] -= logw[static_cast<std::size_t>(j)] * log_part[static_cast<std::size_t>(j)];
  }
  const ComplexVector ahat = dct2(std::span<const Complex>(residue));
  out.a.resize(static_cast<std::size_t>(n1));
  for (int j = 0; j < n1; ++j) out.a[static_cast<std::size_t>(j)] = ahat[static_cast<std::size_t>(j)] / diag(j);

  if (n2 > 0) {
    // enforce the interpolation conditions: a converged-looking GMRES run on
    // an effectively singular reduced system otherwise slips garbage through
    ComplexVector apad(static_cast<std::size_t>(n), Complex{});
    for (int j = 0; j < n1; ++j) apad[static_cast<std::size_t>(j)] = out.a[static_cast<std::size_t>(j)];
    const ComplexVector poly_part = dct3(std::span<const Complex>(apad));
    double scale = 0.0, worst = 0.0;
    for (int j = 0; j < n; ++j) {
      scale = std::max(scale, std::abs(samples[static_cast<std::size_t>(j)]));
      worst = std::max(worst, std::abs(residue[static_cast<std::size_t>(j)] - poly_part[static_cast<std::size_t>(j)]));
    }
    if (worst > 1e-9 * std::max(scale, 1e-300))
      throw std::runtime_error("reduced system not solvable (check invertibility assumption)");
  }
  return out;
}

SingularInterpolant fit(std::span<const double> samples, double alpha, int n1, int n2, const FitOptions& opts) {
  ComplexVector promoted(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) promoted[j] = Complex(samples[j], 0.0);
  return fit(std::span<const Complex>(promoted), alpha, n1, n2, opts);
}

SingularInterpolant fit(const std::function<Complex(double)>& f, double alpha, int n1, int n2,
                        const FitOptions& opts) {
  const ChebyshevGrid grid = cheb_points(n1 + n2);
  ComplexVector samples(grid.points.size());
  for (std::size_t j = 0; j < grid.points.size(); ++j) samples[j] = f(grid.points[j]);
  return fit(std::span<const Complex>(samples), alpha, n1, n2, opts);
}

Complex evaluate(const SingularInterpolant& interp, double x) {
  if (x == interp.alpha) throw std::domain_error("evaluation at singular point");
  Complex value{};
  if (!interp.a.empty()) value += clenshaw_t(std::span<const Complex>(interp.a), x);
  if (!interp.b.empty())
    value += std::log(std::abs(x - interp.alpha)) * clenshaw_t(std::span<const Complex>(interp.b), x);
  return value;
}

double lebesgue_l1(double alpha, int n1, int n2, int segments_hint) {
  const int n = n1 + n2;
  if (n < 1) throw std::invalid_argument("need n1 + n2 >= 1");
  double total = 0.0;
  RealVector unit(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    unit[static_cast<std::size_t>(j)] = 1.0;
    const SingularInterpolant basis_fn = fit(std::span<const double>(unit), alpha, n1, n2);
    unit[static_cast<std::size_t>(j)] = 0.0;
    total += graded_l1_norm([&basis_fn](double x) { return evaluate(basis_fn, x); }, alpha, segments_hint);
  }
  return total;
}

namespace {

// one-sided Jacobi: rotate column pairs until mutually orthogonal; the
// singular values are then the column norms. Accurate for small singular
// values, unlike forming M^T M.
void jacobi_singular_values(std::vector<RealVector>& cols, RealVector& sigma) {
  const std::size_t m = cols.size();
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < cols[p].size(); ++i) {
          app += cols[p][i] * cols[p][i];
          aqq += cols[q][i] * cols[q][i];
          apq += cols[p][i] * cols[q][i];
        }
        if (std::abs(apq) <= 10.0 * eps * std::sqrt(app * aqq) || apq == 0.0) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < cols[p].size(); ++i) {
          const double vp = cols[p][i];
          const double vq = cols[q][i];
          cols[p][i] = c * vp - s * vq;
          cols[q][i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  sigma.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    double s = 0.0;
    for (const double v : cols[p]) s += v * v;
    sigma[p] = std::sqrt(s);
  }
}

}  // namespace

InvertibilityReport check_invertibility(double alpha, int n1, int n2) {
  InvertibilityReport report;
  if (n2 == 0) {  // empty reduced system
    report.invertible = true;
    return report;
  }
  const RealVector logw = log_weights(cheb_points(n1 + n2), alpha);
  std::vector<RealVector> cols(static_cast<std::size_t>(n2));
  RealVector unit(static_cast<std::size_t>(n2), 0.0);
  for (int c = 0; c < n2; ++c) {
    unit[static_cast<std::size_t>(c)] = 1.0;
    cols[static_cast<std::size_t>(c)] = reduced_matvec_impl(std::span<const double>(unit), logw, n1, n2);
    unit[static_cast<std::size_t>(c)] = 0.0;
  }
  RealVector sigma;
  jacobi_singular_values(cols, sigma);
  report.sigma_min = *std::min_element(sigma.begin(), sigma.end());
  report.sigma_max = *std::max_element(sigma.begin(), sigma.end());
  report.invertible = report.sigma_max > 0.0 && report.sigma_min >= 1e-13 * report.sigma_max;
  return report;
}

std::string to_json(const SingularInterpolant& interp) {
  nlohmann::json j;
  j["alpha"] = interp.alpha;
  j["n1"] = interp.n1;
  j["n2"] = interp.n2;
  j["a"] = nlohmann::json::array();
  for (const Complex& c : interp.a) j["a"].push_back({c.real(), c.imag()});
  j["b"] = nlohmann::json::array();
  for (const Complex& c : interp.b) j["b"].push_back({c.real(), c.imag()});
  return j.dump(2);
}

SingularInterpolant interpolant_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SingularInterpolant interp;
  interp.alpha = j.at("alpha").get<double>();
  interp.n1 = j.at("n1").get<int>();
  interp.n2 = j.at("n2").get<int>();
  for (const auto& pair : j.at("a")) interp.a.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  for (const auto& pair : j.at("b")) interp.b.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  if (static_cast<int>(interp.a.size()) != interp.n1 || static_cast<int>(interp.b.size()) != interp.n2)
    throw std::invalid_argument("coefficient counts disagree with n1/n2");
  return interp;
}

}  // namespace logcheb
