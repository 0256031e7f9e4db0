#include "sphmra/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphmra::oracle {

namespace {

constexpr double pi = std::numbers::pi;

struct Rule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_r.
Rule1d gauss_legendre(int r) {
  Rule1d rule{std::vector<double>(r), std::vector<double>(r)};
  for (int i = 0; i < (r + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (r + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= r; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = r * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= r; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = r * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[r - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[r - 1 - i] = w;
  }
  return rule;
}

// Rule for int_0^pi g(theta) d theta.
Rule1d polar_rule(int r, Method method) {
  Rule1d out;
  if (method == Method::gauss_legendre) {
    static std::mutex mutex;
    static std::map<int, Rule1d> cache;
    Rule1d gl;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find(r);
      if (it == cache.end()) {
        it = cache.emplace(r, gauss_legendre(r)).first;
      }
      gl = it->second;
    }
    for (int i = 0; i < r; ++i) {
      out.nodes.push_back(0.5 * pi * (gl.nodes[i] + 1.0));
      out.weights.push_back(0.5 * pi * gl.weights[i]);
    }
    return out;
  }
  const double h = pi / r;
  for (int i = 0; i <= r; ++i) {
    out.nodes.push_back(i * h);
    const double c = (i == 0 || i == r) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    out.weights.push_back(c * h / 3.0);
  }
  return out;
}

// Rule for int_0^{2 pi} g(phi) d phi: periodic trapezoid, or Simpson.
Rule1d azimuth_rule(int r, Method method) {
  Rule1d out;
  const int count = 2 * r;
  const double h = 2.0 * pi / count;
  for (int i = 0; i < count; ++i) {
    out.nodes.push_back(i * h);
    const double c = method == Method::gauss_legendre ? 1.0 : (i % 2 == 1 ? 4.0 / 3.0 : 2.0 / 3.0);
    out.weights.push_back(c * h);
  }
  return out;
}

} // namespace

int default_resolution(int n) { return n <= 3 ? 64 : 24; }

IntegrationSpec::IntegrationSpec(SphereGeometry g)
    : IntegrationSpec(g, default_resolution(g.n()), Method::gauss_legendre) {}

IntegrationSpec::IntegrationSpec(SphereGeometry g, int res, Method m)
    : geometry(g), resolution(res), method(m) {
  if (res < 8 || res % 2 != 0) {
    throw std::invalid_argument("oracle resolution must be even and >= 8");
  }
}

double polar_integral(const std::function<double(double)>& g, int alpha, int resolution,
                      Method method) {
  if (resolution < 2 || (method == Method::simpson && resolution % 2 != 0)) {
    throw std::invalid_argument("polar_integral: invalid resolution");
  }
  const Rule1d rule = polar_rule(resolution, method);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::pow(std::sin(rule.nodes[i]), alpha) * g(rule.nodes[i]);
  }
  return sum;
}

complex dense_integral(const Function& f, const IntegrationSpec& spec) {
  const int n = spec.geometry.n();
  const Rule1d polar = polar_rule(spec.resolution, spec.method);
  const Rule1d azimuth = azimuth_rule(spec.resolution, spec.method);

  // polar weights including the surface element sin^(n-nu) theta_nu
  std::vector<std::vector<double>> w(n - 1);
  for (int nu = 1; nu <= n - 1; ++nu) {
    for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
      w[nu - 1].push_back(polar.weights[i] * std::pow(std::sin(polar.nodes[i]), n - nu));
    }
  }

  SphericalPoint x;
  x.theta.assign(n - 1, 0.0);
  std::vector<std::size_t> idx(n - 1, 0);
  const std::size_t m = polar.nodes.size();
  complex total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int nu = 0; nu < n - 1; ++nu) {
      x.theta[nu] = polar.nodes[idx[nu]];
      weight *= w[nu][idx[nu]];
    }
    if (weight != 0.0) {
      complex inner = 0.0;
      for (std::size_t a = 0; a < azimuth.nodes.size(); ++a) {
        x.phi = azimuth.nodes[a];
        inner += azimuth.weights[a] * f(x);
      }
      total += weight * inner;
    }
    int axis = n - 2;
    while (axis >= 0 && ++idx[axis] == m) {
      idx[axis] = 0;
      --axis;
    }
    if (axis < 0) {
      break;
    }
  }
  return total;
}

CheckedIntegral dense_integral_checked(const Function& f, const IntegrationSpec& spec) {
  const complex coarse = dense_integral(f, spec);
  const IntegrationSpec fine(spec.geometry, 2 * spec.resolution, spec.method);
  const complex value = dense_integral(f, fine);
  const double deviation = std::abs(value - coarse);
  return {value, deviation, deviation <= 1e-8 * std::max(1.0, std::abs(value))};
}

complex inner_product(const Function& f, const Function& g, const IntegrationSpec& spec) {
  const auto integrand = [&](const SphericalPoint& x) { return std::conj(f(x)) * g(x); };
  return dense_integral(integrand, spec) / spec.geometry.sigma_n();
}

Function zonal_convolution(Function f, std::function<complex(double)> g_zonal,
                           IntegrationSpec spec) {
  return [f = std::move(f), g = std::move(g_zonal), spec](const SphericalPoint& x) {
    const auto integrand = [&](const SphericalPoint& y) { return f(y) * g(dot(x, y)); };
    return dense_integral(integrand, spec) / spec.geometry.sigma_n();
  };
}

complex brute_fourier(const Function& f, const HarmonicIndex& index, const IntegrationSpec& spec) {
  validate_index(spec.geometry, index);
  const auto y = [&](const SphericalPoint& x) { return harmonic_eval(spec.geometry, index, x); };
  return inner_product(y, f, spec);
}

double generating_function_gegenbauer(double lambda, int l, double t) {
  using big = boost::multiprecision::cpp_bin_float_50;
  if (l < 0 || l > generating_function_max_degree) {
    throw std::invalid_argument("generating-function expansion supports degrees 0.." +
                                std::to_string(generating_function_max_degree));
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive");
  }
  // (1 - r(2t - r))^(-lambda) = sum_j (lambda)_j / j! r^j (2t - r)^j; the r^l
  // coefficient collects (-1)^k (lambda)_{l-k} / (k! (l-2k)!) (2t)^(l-2k).
  const big lam = lambda;
  const big two_t = big(2) * big(t);
  big sum = 0;
  for (int k = 0; 2 * k <= l; ++k) {
    big term = 1;
    for (int i = 0; i < l - k; ++i) {
      term *= lam + i;
    }
    for (int i = 2; i <= k; ++i) {
      term /= i;
    }
    for (int i = 2; i <= l - 2 * k; ++i) {
      term /= i;
    }
    term *= boost::multiprecision::pow(two_t, l - 2 * k);
    sum += (k % 2 == 0) ? term : big(-term);
  }
  return static_cast<double>(sum);
}

} // namespace sphmra::oracle
