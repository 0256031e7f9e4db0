#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace sphmra {

using complex = std::complex<double>;

/// Order and degree of a Gegenbauer polynomial C_l^lambda. lambda > 0.
struct GegenbauerParams {
  double lambda;
  int degree;

  GegenbauerParams(double lambda, int degree);
};

/// Finite Gegenbauer expansion f(t) = sum_l coeffs[l] C_l^lambda(t).
struct ZonalSpectrum {
  double lambda = 0.5;
  std::vector<complex> coeffs;

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

namespace specfun {

/// log Gamma(x) for x > 0. Reentrant.
double log_gamma(double x);

/// 1/Gamma(x) for any real x; exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Generalized binomial coefficient Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1))
/// for a - k > -1 and k >= 0.
double binomial(double a, double k);

/// C_l^lambda(t) by the three-term recurrence. Throws std::domain_error for
/// |t| > 1 beyond rounding.
double gegenbauer(const GegenbauerParams& params, double t);

/// C_0^lambda(t), ..., C_L^lambda(t).
std::vector<double> gegenbauer_all(double lambda, int max_degree, double t);

/// C_l^lambda(1) = binom(l + 2 lambda - 1, l), evaluated in closed form.
double gegenbauer_at_one(const GegenbauerParams& params);

/// Squared weighted norm int_{-1}^{1} C_l^lambda(t)^2 (1-t^2)^(lambda-1/2) dt
///   = pi 2^(1-2 lambda) Gamma(l + 2 lambda) / (l! (l + lambda) Gamma(lambda)^2).
double gegenbauer_norm_1d(const GegenbauerParams& params);
double log_gegenbauer_norm_1d(const GegenbauerParams& params);

/// Gegenbauer coefficients of a polynomial zonal function of degree at most
/// max_degree, normalized so that C_k^lambda has coefficient vector e_k.
/// Throws convergence_error if f is not reproduced by the expansion.
ZonalSpectrum gegenbauer_coefficients(const std::function<complex(double)>& f,
                                      double lambda, int max_degree);

/// sum_l coeffs[l] C_l^lambda(t).
complex zonal_eval(const ZonalSpectrum& spec, double t);

} // namespace specfun
} // namespace sphmra
