#pragma once

#include <functional>

#include "sphmra/harmonics.hpp"

// Slow reference computations. Nothing here touches the quadrature, mra or
// transform code paths, so results obtained here can certify them.

namespace sphmra::oracle {

enum class Method {
  gauss_legendre,  // Gauss-Legendre in each polar angle, trapezoid in phi
  simpson,         // composite Simpson in every angle
};

struct IntegrationSpec {
  SphereGeometry geometry;
  int resolution;  // nodes (or Simpson intervals) per polar angle; even, >= 8
  Method method = Method::gauss_legendre;

  explicit IntegrationSpec(SphereGeometry g);
  IntegrationSpec(SphereGeometry g, int res, Method m = Method::gauss_legendre);
};

/// Default points per polar angle for dimension n.
int default_resolution(int n);

using Function = std::function<complex(const SphericalPoint&)>;

/// int_0^pi g(theta) sin^alpha(theta) d theta with `resolution` nodes.
double polar_integral(const std::function<double(double)>& g, int alpha, int resolution,
                      Method method = Method::gauss_legendre);

/// int_{S^n} f dsigma over the tensor grid in (theta_1..theta_{n-1}, phi).
complex dense_integral(const Function& f, const IntegrationSpec& spec);

struct CheckedIntegral {
  complex value;
  double deviation;  // |I(r) - I(2r)|
  bool converged;    // deviation <= 1e-8 (relative to max(1, |I|))
};

/// dense_integral at resolution r and 2r.
CheckedIntegral dense_integral_checked(const Function& f, const IntegrationSpec& spec);

/// (1/sigma_n) int conj(f) g dsigma.
complex inner_product(const Function& f, const Function& g, const IntegrationSpec& spec);

/// (f * g)(x) = (1/sigma_n) int f(y) g(x . y) dsigma(y), evaluated lazily.
Function zonal_convolution(Function f, std::function<complex(double)> g_zonal,
                           IntegrationSpec spec);

/// <Y_l^k, f>.
complex brute_fourier(const Function& f, const HarmonicIndex& index, const IntegrationSpec& spec);

/// Coefficient of r^l in the power series of (1 - 2tr + r^2)^(-lambda),
/// computed in 50-digit arithmetic from the binomial expansion. l <= 64.
double generating_function_gegenbauer(double lambda, int l, double t);

inline constexpr int generating_function_max_degree = 64;

} // namespace sphmra::oracle
