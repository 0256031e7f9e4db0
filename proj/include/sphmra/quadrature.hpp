#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sphmra/harmonics.hpp"

namespace sphmra {

/// Rule sum_u chi_u f(cos(u pi / M)) for int_0^pi f(cos t) sin^alpha t dt,
/// exact for polynomials f of degree <= M.
struct QuadratureRule {
  int M = 0;
  int alpha = 0;
  std::vector<double> weights;  // chi_0 .. chi_M

  double node(int u) const;  // cos(u pi / M)
};

/// Index of one node of the equiangular grid N_j:
/// theta_nu = s_nu pi / 2^j (0 <= s_nu <= 2^j), phi = t pi / 2^j
/// (0 <= t < 2^(j+1)).
struct GridNode {
  std::vector<int> s;
  int t = 0;
  int level = 1;
};

namespace quadrature {

QuadratureRule make_rule(int M, int alpha);

/// Shared, immutable rule for (M, alpha); built once per process.
std::shared_ptr<const QuadratureRule> cached_rule(int M, int alpha);

complex integrate(const QuadratureRule& rule, std::span<const complex> samples);

/// int_0^pi cos(mu t) sin^alpha t dt in closed form.
double single_frequency_integral(int mu, int alpha);

/// Type-I DCT: coefficients a_0..a_M of the cosine series of f(cos t) from the
/// samples f(cos(u pi / M)), u = 0..M.
std::vector<double> dct_i(std::span<const double> samples);

/// sum_mu a_mu cos(mu theta).
double cosine_series(std::span<const double> coeffs, double theta);

/// Default cap on grid sizes; overridden by SPHMRA_MAX_NODES when set.
std::int64_t default_node_cap();

/// (2^j + 1)^(n-1) 2^(j+1), or throws resource_error when above `cap`.
std::int64_t grid_size(const SphereGeometry& geometry, int j, std::int64_t cap);
std::int64_t grid_size(const SphereGeometry& geometry, int j);

/// Every node of N_j; s_1 varies slowest and t fastest.
std::vector<GridNode> grid_nodes(const SphereGeometry& geometry, int j, std::int64_t cap);
std::vector<GridNode> grid_nodes(const SphereGeometry& geometry, int j);

SphericalPoint node_point(const GridNode& node);

/// prod_nu chi_{s_nu} with M = 2^j and alpha = n - nu.
double level_weight(const SphereGeometry& geometry, int j, const GridNode& node);

/// level_weight for every node of N_j, in grid_nodes order of the s multi-index
/// (one entry per latitude node, shared across t).
std::vector<double> latitude_weights(const SphereGeometry& geometry, int j);

} // namespace quadrature
} // namespace sphmra
