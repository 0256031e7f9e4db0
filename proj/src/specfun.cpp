#include "sphmra/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "sphmra/errors.hpp"

namespace sphmra {

GegenbauerParams::GegenbauerParams(double lambda_, int degree_) : lambda(lambda_), degree(degree_) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("Gegenbauer order must be positive, got " + std::to_string(lambda));
  }
  if (degree < 0) {
    throw std::invalid_argument("Gegenbauer degree must be non-negative");
  }
}

namespace specfun {

namespace {

constexpr double domain_slack = 1e-12;

double checked_argument(double t) {
  if (!(std::abs(t) <= 1.0 + domain_slack)) {
    throw std::domain_error("Gegenbauer argument outside [-1, 1]: " + std::to_string(t));
  }
  return std::clamp(t, -1.0, 1.0);
}

} // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma requires a positive argument");
  }
  // lgamma_r leaves the global signgam alone.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double reciprocal_gamma(double x) {
  if (x > 0.0) {
    return std::exp(-log_gamma(x));
  }
  if (x == std::floor(x)) {
    return 0.0;
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  return std::sin(std::numbers::pi * x) * std::exp(log_gamma(1.0 - x)) / std::numbers::pi;
}

double binomial(double a, double k) {
  if (k < 0.0 || a - k <= -1.0) {
    throw std::domain_error("binomial: requires k >= 0 and a - k > -1");
  }
  return std::exp(log_gamma(a + 1.0) - log_gamma(k + 1.0) - log_gamma(a - k + 1.0));
}

double gegenbauer(const GegenbauerParams& params, double t) {
  t = checked_argument(t);
  const double lambda = params.lambda;
  if (params.degree == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double curr = 2.0 * lambda * t;
  for (int k = 1; k < params.degree; ++k) {
    const double next = (2.0 * (k + lambda) * t * curr - (k + 2.0 * lambda - 1.0) * prev) / (k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> gegenbauer_all(double lambda, int max_degree, double t) {
  GegenbauerParams(lambda, std::max(max_degree, 0));
  t = checked_argument(t);
  std::vector<double> c(static_cast<std::size_t>(max_degree) + 1);
  c[0] = 1.0;
  if (max_degree >= 1) {
    c[1] = 2.0 * lambda * t;
  }
  for (int k = 1; k < max_degree; ++k) {
    c[k + 1] = (2.0 * (k + lambda) * t * c[k] - (k + 2.0 * lambda - 1.0) * c[k - 1]) / (k + 1);
  }
  return c;
}

double gegenbauer_at_one(const GegenbauerParams& params) {
  return binomial(params.degree + 2.0 * params.lambda - 1.0, params.degree);
}

double log_gegenbauer_norm_1d(const GegenbauerParams& params) {
  const double lambda = params.lambda;
  const double l = params.degree;
  return std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::numbers::ln2 +
         log_gamma(l + 2.0 * lambda) - log_gamma(l + 1.0) - std::log(l + lambda) -
         2.0 * log_gamma(lambda);
}

double gegenbauer_norm_1d(const GegenbauerParams& params) {
  return std::exp(log_gegenbauer_norm_1d(params));
}

ZonalSpectrum gegenbauer_coefficients(const std::function<complex(double)>& f, double lambda,
                                      int max_degree) {
  GegenbauerParams(lambda, max_degree);
  const int count = max_degree + 1;

  // Interpolate at Chebyshev-Lobatto points; the Gegenbauer basis is solved for
  // directly, which reproduces the biorthonormal coefficients for polynomial f.
  std::vector<double> nodes(count);
  if (count == 1) {
    nodes[0] = 0.0;
  } else {
    for (int i = 0; i < count; ++i) {
      nodes[i] = std::cos(std::numbers::pi * i / max_degree);
    }
  }
  Eigen::MatrixXd basis(count, count);
  Eigen::VectorXcd rhs(count);
  for (int i = 0; i < count; ++i) {
    const auto c = gegenbauer_all(lambda, max_degree, nodes[i]);
    for (int l = 0; l < count; ++l) {
      basis(i, l) = c[l];
    }
    rhs(i) = f(nodes[i]);
  }
  const Eigen::VectorXcd solution = basis.cast<complex>().partialPivLu().solve(rhs);

  ZonalSpectrum spec{lambda, std::vector<complex>(solution.data(), solution.data() + count)};

  // Residual at interleaved points detects inputs of higher degree.
  double scale = 0.0;
  double residual = 0.0;
  for (int i = 0; i < 2 * count + 1; ++i) {
    const double t = std::cos(std::numbers::pi * (i + 0.5) / (2 * count + 1));
    const complex expected = f(t);
    scale = std::max(scale, std::abs(expected));
    residual = std::max(residual, std::abs(zonal_eval(spec, t) - expected));
  }
  if (residual > 1e-9 * std::max(1.0, scale)) {
    throw convergence_error("gegenbauer_coefficients: input is not a polynomial of degree <= " +
                            std::to_string(max_degree) + " (residual " +
                            std::to_string(residual) + ")");
  }
  return spec;
}

complex zonal_eval(const ZonalSpectrum& spec, double t) {
  if (spec.coeffs.empty()) {
    checked_argument(t);
    return 0.0;
  }
  const auto c = gegenbauer_all(spec.lambda, spec.max_degree(), t);
  complex sum = 0.0;
  for (std::size_t l = 0; l < c.size(); ++l) {
    sum += spec.coeffs[l] * c[l];
  }
  return sum;
}

} // namespace specfun
} // namespace sphmra
