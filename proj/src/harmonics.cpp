#include "sphmra/harmonics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphmra {

namespace {

__extension__ typedef __int128 int128;

constexpr int128 int64_max = std::numeric_limits<std::int64_t>::max();

// Exact binomial coefficient C(a, b); throws when an intermediate leaves the
// 64-bit range.
int128 exact_binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) {
    return 0;
  }
  b = std::min(b, a - b);
  int128 r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r = r * (a - i) / (i + 1);
    if (r > int64_max) {
      throw std::overflow_error("binomial coefficient exceeds 64-bit range");
    }
  }
  return r;
}

std::int64_t narrow(int128 v, const char* what) {
  if (v > int64_max) {
    throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

void append_chains(int n, int depth, int upper, std::vector<int>& chain, int l,
                   std::vector<HarmonicIndex>& out) {
  if (depth == n - 1) {
    const int last = chain.back();
    out.push_back({l, chain, 1});
    if (last > 0) {
      out.push_back({l, chain, -1});
    }
    return;
  }
  for (int k = 0; k <= upper; ++k) {
    chain.push_back(k);
    append_chains(n, depth + 1, k, chain, l, out);
    chain.pop_back();
  }
}

// Order of the Gegenbauer factor on axis nu (1-based).
double axis_order(int n, int nu, int k) { return 0.5 * (n - nu) + k; }

// value * exp(i angle) for a real value of either sign.
complex rotate(double value, double angle) {
  return {value * std::cos(angle), value * std::sin(angle)};
}

double log_norm_sq(const SphereGeometry& geometry, const HarmonicIndex& index) {
  // (1/sigma_n) A^2 2pi prod_nu ||C_{k_{nu-1}-k_nu}^{mu_nu}||^2_1d = 1
  const int n = geometry.n();
  double log_prod = std::log(2.0 * std::numbers::pi);
  int prev = index.l;
  for (int nu = 1; nu <= n - 1; ++nu) {
    const int k = index.chain[nu - 1];
    log_prod += specfun::log_gegenbauer_norm_1d({axis_order(n, nu, k), prev - k});
    prev = k;
  }
  return std::log(geometry.sigma_n()) - log_prod;
}

} // namespace

double sphere_measure(int n) {
  const double lambda = 0.5 * (n - 1);
  return std::exp(std::numbers::ln2 + (lambda + 1.0) * std::log(std::numbers::pi) -
                  specfun::log_gamma(lambda + 1.0));
}

SphereGeometry::SphereGeometry(int n) : n_(n), lambda_(0.5 * (n - 1)) {
  if (n < 2) {
    throw std::invalid_argument("sphere dimension must be >= 2, got " + std::to_string(n));
  }
  sigma_n_ = sphere_measure(n);
}

std::strong_ordering HarmonicIndex::operator<=>(const HarmonicIndex& other) const {
  if (auto c = l <=> other.l; c != 0) {
    return c;
  }
  if (auto c = chain <=> other.chain; c != 0) {
    return c;
  }
  // +1 sorts before -1
  return other.sign <=> sign;
}

void validate_index(const SphereGeometry& geometry, const HarmonicIndex& index) {
  const int n = geometry.n();
  if (static_cast<int>(index.chain.size()) != n - 1) {
    throw std::invalid_argument("harmonic index chain must have n-1 entries");
  }
  int prev = index.l;
  for (int k : index.chain) {
    if (k < 0 || k > prev) {
      throw std::invalid_argument("harmonic index chain must satisfy l >= k_1 >= ... >= 0");
    }
    prev = k;
  }
  if (index.sign != 1 && index.sign != -1) {
    throw std::invalid_argument("harmonic index sign must be +1 or -1");
  }
  if (index.chain.back() == 0 && index.sign != 1) {
    throw std::invalid_argument("harmonic index sign must be +1 when k_{n-1} = 0");
  }
}

std::vector<double> to_cartesian(const SphericalPoint& point) {
  const std::size_t m = point.theta.size();
  std::vector<double> x(m + 2);
  double prod = 1.0;
  for (std::size_t nu = 0; nu < m; ++nu) {
    x[nu] = prod * std::cos(point.theta[nu]);
    prod *= std::sin(point.theta[nu]);
  }
  x[m] = prod * std::cos(point.phi);
  x[m + 1] = prod * std::sin(point.phi);
  return x;
}

SphericalPoint from_cartesian(std::span<const double> x) {
  if (x.size() < 3) {
    throw std::invalid_argument("from_cartesian needs at least 3 coordinates");
  }
  SphericalPoint p;
  const std::size_t m = x.size() - 2;
  p.theta.resize(m);
  for (std::size_t nu = 0; nu < m; ++nu) {
    double tail = 0.0;
    for (std::size_t i = nu + 1; i < x.size(); ++i) {
      tail += x[i] * x[i];
    }
    p.theta[nu] = std::atan2(std::sqrt(tail), x[nu]);
  }
  double phi = std::atan2(x[m + 1], x[m]);
  if (phi < 0.0) {
    phi += 2.0 * std::numbers::pi;
  }
  p.phi = phi;
  return p;
}

double dot(const SphericalPoint& x, const SphericalPoint& y) {
  if (x.theta.size() != y.theta.size()) {
    throw std::invalid_argument("dot: points live on spheres of different dimension");
  }
  const auto a = to_cartesian(x);
  const auto b = to_cartesian(y);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return std::clamp(s, -1.0, 1.0);
}

std::int64_t harmonic_count(const SphereGeometry& geometry, int l) {
  if (l < 0) {
    throw std::invalid_argument("harmonic_count: degree must be non-negative");
  }
  const std::int64_t n = geometry.n();
  const int128 numerator = int128(2 * l + n - 1) * exact_binomial(l + n - 2, l);
  return narrow(numerator / (n - 1), "harmonic_count");
}

std::int64_t dim_pi(const SphereGeometry& geometry, int m) {
  if (m < 0) {
    throw std::invalid_argument("dim_pi: degree must be non-negative");
  }
  const std::int64_t n = geometry.n();
  const int128 numerator = int128(n + 2 * m) * exact_binomial(n + m - 1, m);
  return narrow(numerator / n, "dim_pi");
}

std::vector<HarmonicIndex> enumerate_indices(const SphereGeometry& geometry, int max_degree) {
  std::vector<HarmonicIndex> out;
  std::vector<int> chain;
  for (int l = 0; l <= max_degree; ++l) {
    append_chains(geometry.n(), 0, l, chain, l, out);
  }
  return out;
}

double normalization_constant(const SphereGeometry& geometry, const HarmonicIndex& index) {
  validate_index(geometry, index);
  return std::exp(0.5 * log_norm_sq(geometry, index));
}

complex harmonic_eval(const SphereGeometry& geometry, const HarmonicIndex& index,
                      const SphericalPoint& point) {
  validate_index(geometry, index);
  const int n = geometry.n();
  if (static_cast<int>(point.theta.size()) != n - 1) {
    throw std::invalid_argument("harmonic_eval: point dimension does not match the sphere");
  }
  double value = normalization_constant(geometry, index);
  int prev = index.l;
  for (int nu = 1; nu <= n - 1; ++nu) {
    const int k = index.chain[nu - 1];
    const double theta = point.theta[nu - 1];
    value *= specfun::gegenbauer({axis_order(n, nu, k), prev - k}, std::cos(theta)) *
             std::pow(std::sin(theta), k);
    prev = k;
  }
  return rotate(value, index.azimuthal() * point.phi);
}

double addition_kernel(const SphereGeometry& geometry, int l, const SphericalPoint& x,
                       const SphericalPoint& y) {
  return specfun::gegenbauer({geometry.lambda(), l}, dot(x, y));
}

complex addition_sum(const SphereGeometry& geometry, int l, const SphericalPoint& x,
                     const SphericalPoint& y) {
  std::vector<HarmonicIndex> degree_l;
  for (auto& index : enumerate_indices(geometry, l)) {
    if (index.l == l) {
      degree_l.push_back(std::move(index));
    }
  }
  const HarmonicBasis basis(geometry, std::move(degree_l));
  const auto yx = basis.values(x);
  const auto yy = basis.values(y);
  complex sum = 0.0;
  for (std::size_t i = 0; i < yx.size(); ++i) {
    sum += std::conj(yx[i]) * yy[i];
  }
  const double lambda = geometry.lambda();
  return lambda / (l + lambda) * sum;
}

HarmonicBasis::HarmonicBasis(SphereGeometry geometry, std::vector<HarmonicIndex> indices)
    : geometry_(geometry), indices_(std::move(indices)) {
  norm_.reserve(indices_.size());
  for (const auto& index : indices_) {
    validate_index(geometry_, index);
    norm_.push_back(std::exp(0.5 * log_norm_sq(geometry_, index)));
    max_degree_ = std::max(max_degree_, index.l);
  }
}

HarmonicBasis::AxisTable HarmonicBasis::axis_table(int nu, double theta) const {
  const int n = geometry_.n();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  AxisTable table(static_cast<std::size_t>(max_degree_) + 1);
  double sin_pow = 1.0;
  for (int k = 0; k <= max_degree_; ++k) {
    auto& row = table[k];
    row = specfun::gegenbauer_all(axis_order(n, nu, k), max_degree_ - k, c);
    for (double& v : row) {
      v *= sin_pow;
    }
    sin_pow *= s;
  }
  return table;
}

double HarmonicBasis::latitudinal(std::size_t i, std::span<const AxisTable> tables) const {
  const auto& index = indices_[i];
  double value = norm_[i];
  int prev = index.l;
  for (std::size_t nu = 0; nu < tables.size(); ++nu) {
    const int k = index.chain[nu];
    value *= tables[nu][k][prev - k];
    prev = k;
  }
  return value;
}

std::vector<complex> HarmonicBasis::values(const SphericalPoint& point) const {
  const int n = geometry_.n();
  if (static_cast<int>(point.theta.size()) != n - 1) {
    throw std::invalid_argument("HarmonicBasis: point dimension does not match the sphere");
  }
  std::vector<AxisTable> tables;
  tables.reserve(n - 1);
  for (int nu = 1; nu <= n - 1; ++nu) {
    tables.push_back(axis_table(nu, point.theta[nu - 1]));
  }
  std::vector<complex> out(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    out[i] = rotate(latitudinal(i, tables), indices_[i].azimuthal() * point.phi);
  }
  return out;
}

} // namespace sphmra
