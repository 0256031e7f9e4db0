#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sphmra/specfun.hpp"

namespace sphmra {

/// The unit sphere S^n in R^(n+1): dimension n >= 2, Gegenbauer order
/// lambda = (n-1)/2 and total surface measure sigma_n.
class SphereGeometry {
public:
  explicit SphereGeometry(int n);

  int n() const { return n_; }
  double lambda() const { return lambda_; }
  double sigma_n() const { return sigma_n_; }

  bool operator==(const SphereGeometry& other) const { return n_ == other.n_; }

private:
  int n_;
  double lambda_;
  double sigma_n_;
};

/// Surface measure of S^n, 2 pi^(lambda+1) / Gamma(lambda+1).
double sphere_measure(int n);

/// Label of one basis harmonic: degree l and the chain
/// l >= k_1 >= ... >= k_{n-1} >= 0, with a sign attached to k_{n-1}.
struct HarmonicIndex {
  int l = 0;
  std::vector<int> chain;  // k_1, ..., k_{n-1}
  int sign = 1;

  /// Signed azimuthal frequency sign * k_{n-1}.
  int azimuthal() const { return sign * chain.back(); }

  /// Lexicographic on (l, k_1, ..., k_{n-1}, sign) with +1 before -1.
  std::strong_ordering operator<=>(const HarmonicIndex& other) const;
  bool operator==(const HarmonicIndex& other) const = default;
};

/// Throws std::invalid_argument unless `index` is a valid label on S^n.
void validate_index(const SphereGeometry& geometry, const HarmonicIndex& index);

/// Point in hyperspherical coordinates (theta_1..theta_{n-1}, phi).
struct SphericalPoint {
  std::vector<double> theta;
  double phi = 0.0;
};

std::vector<double> to_cartesian(const SphericalPoint& point);
SphericalPoint from_cartesian(std::span<const double> x);

/// <x, y> clamped to [-1, 1].
double dot(const SphericalPoint& x, const SphericalPoint& y);

/// N(n, l) = (2l+n-1)(l+n-2)! / ((n-1)! l!). Throws std::overflow_error when
/// the value does not fit in 64 bits.
std::int64_t harmonic_count(const SphereGeometry& geometry, int l);

/// dim Pi_m = sum_{l<=m} N(n, l) = (n+2m)(n+m-1)! / (n! m!).
std::int64_t dim_pi(const SphereGeometry& geometry, int m);

/// All indices with l <= max_degree, in HarmonicIndex order.
std::vector<HarmonicIndex> enumerate_indices(const SphereGeometry& geometry, int max_degree);

/// A_l^k making (1/sigma_n) int |Y_l^k|^2 dsigma = 1.
double normalization_constant(const SphereGeometry& geometry, const HarmonicIndex& index);

complex harmonic_eval(const SphereGeometry& geometry, const HarmonicIndex& index,
                      const SphericalPoint& point);

/// C_l^lambda(x . y), the zonal side of the addition theorem.
double addition_kernel(const SphereGeometry& geometry, int l, const SphericalPoint& x,
                       const SphericalPoint& y);

/// lambda/(l+lambda) * sum_k conj(Y_l^k(x)) Y_l^k(y), the harmonic side of the
/// addition theorem, summed over every index of degree l.
complex addition_sum(const SphereGeometry& geometry, int l, const SphericalPoint& x,
                     const SphericalPoint& y);

/// Evaluates a fixed list of harmonics at arbitrary points, sharing the
/// per-axis Gegenbauer recurrences between indices.
class HarmonicBasis {
public:
  HarmonicBasis(SphereGeometry geometry, std::vector<HarmonicIndex> indices);

  const SphereGeometry& geometry() const { return geometry_; }
  const std::vector<HarmonicIndex>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  int max_degree() const { return max_degree_; }

  std::vector<complex> values(const SphericalPoint& point) const;

  /// Per-axis factor table for one polar angle of axis nu (1-based):
  /// table[k][d] = C_d^((n-nu)/2 + k)(cos theta) sin^k theta.
  using AxisTable = std::vector<std::vector<double>>;
  AxisTable axis_table(int nu, double theta) const;

  /// Real latitudinal part A * prod_nu table_nu[k_nu][k_{nu-1} - k_nu] of
  /// index i, given one axis table per polar angle.
  double latitudinal(std::size_t i, std::span<const AxisTable> tables) const;

private:
  SphereGeometry geometry_;
  std::vector<HarmonicIndex> indices_;
  std::vector<double> norm_;
  int max_degree_ = 0;
};

} // namespace sphmra
