#include "sphmra/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "sphmra/errors.hpp"

namespace sphmra {

double QuadratureRule::node(int u) const { return std::cos(std::numbers::pi * u / M); }

namespace quadrature {

namespace {

// log |1/Gamma(x)| and its sign; sign 0 at the poles.
std::pair<double, int> log_reciprocal_gamma(double x) {
  if (x > 0.0) {
    return {-specfun::log_gamma(x), 1};
  }
  if (x == std::floor(x)) {
    return {0.0, 0};
  }
  const double s = std::sin(std::numbers::pi * x);
  return {std::log(std::abs(s)) + specfun::log_gamma(1.0 - x) - std::log(std::numbers::pi),
          s > 0.0 ? 1 : -1};
}

// 1 / (Gamma(a) Gamma(b)), zero when either argument is a pole.
double reciprocal_gamma_product(double a, double b) {
  const auto [la, sa] = log_reciprocal_gamma(a);
  const auto [lb, sb] = log_reciprocal_gamma(b);
  if (sa == 0 || sb == 0) {
    return 0.0;
  }
  return sa * sb * std::exp(la + lb);
}

double endpoint_factor(int v, int M) { return (v == 0 || v == M) ? 0.5 : 1.0; }

void check_rule_args(int M, int alpha) {
  if (M < 1) {
    throw std::invalid_argument("quadrature rule needs M >= 1");
  }
  if (alpha < 1) {
    throw std::invalid_argument("quadrature rule needs alpha >= 1");
  }
}

} // namespace

QuadratureRule make_rule(int M, int alpha) {
  check_rule_args(M, alpha);
  const double half = 0.5 * alpha;
  const double log_prefactor = std::log(std::numbers::pi) + specfun::log_gamma(alpha + 1.0) -
                               (alpha - 1) * std::numbers::ln2 - std::log(M);
  const double prefactor = std::exp(log_prefactor);

  std::vector<double> terms(M / 2 + 1);
  for (int mu = 0; mu <= M / 2; ++mu) {
    const double sign = (mu % 2 == 0) ? 1.0 : -1.0;
    terms[mu] = endpoint_factor(2 * mu, M) * sign *
                reciprocal_gamma_product(half - mu + 1.0, half + mu + 1.0);
  }

  QuadratureRule rule{M, alpha, std::vector<double>(static_cast<std::size_t>(M) + 1)};
  for (int u = 0; u <= M; ++u) {
    double omega = 0.0;
    for (int mu = 0; mu <= M / 2; ++mu) {
      omega += terms[mu] * std::cos(std::numbers::pi * ((2 * mu * u) % (2 * M)) / M);
    }
    rule.weights[u] = endpoint_factor(u, M) * prefactor * omega;
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_rule(int M, int alpha) {
  check_rule_args(M, alpha);
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const QuadratureRule>> cache;
  const auto key = std::make_pair(M, alpha);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  auto rule = std::make_shared<const QuadratureRule>(make_rule(M, alpha));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(rule)).first->second;
}

complex integrate(const QuadratureRule& rule, std::span<const complex> samples) {
  if (samples.size() != rule.weights.size()) {
    throw std::invalid_argument("integrate: expected " + std::to_string(rule.weights.size()) +
                                " samples, got " + std::to_string(samples.size()));
  }
  complex sum = 0.0;
  for (std::size_t u = 0; u < samples.size(); ++u) {
    sum += rule.weights[u] * samples[u];
  }
  return sum;
}

double single_frequency_integral(int mu, int alpha) {
  if (mu < 0) {
    mu = -mu;
  }
  check_rule_args(1, alpha);
  if (mu % 2 == 1) {
    return 0.0;
  }
  const double cos_term = (mu / 2) % 2 == 0 ? 1.0 : -1.0;
  return std::numbers::pi * std::exp(specfun::log_gamma(alpha + 1.0) - alpha * std::numbers::ln2) *
         cos_term * reciprocal_gamma_product(0.5 * (alpha - mu + 2), 0.5 * (alpha + mu + 2));
}

std::vector<double> dct_i(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("dct_i needs at least two samples");
  }
  const int M = static_cast<int>(samples.size()) - 1;
  std::vector<double> a(samples.size());
  for (int mu = 0; mu <= M; ++mu) {
    double sum = 0.0;
    for (int u = 0; u <= M; ++u) {
      sum += endpoint_factor(u, M) * samples[u] *
             std::cos(std::numbers::pi * ((static_cast<long>(mu) * u) % (2 * M)) / M);
    }
    a[mu] = 2.0 * endpoint_factor(mu, M) / M * sum;
  }
  return a;
}

double cosine_series(std::span<const double> coeffs, double theta) {
  double sum = 0.0;
  for (std::size_t mu = 0; mu < coeffs.size(); ++mu) {
    sum += coeffs[mu] * std::cos(static_cast<double>(mu) * theta);
  }
  return sum;
}

std::int64_t default_node_cap() {
  if (const char* env = std::getenv("SPHMRA_MAX_NODES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v;
    }
    throw std::invalid_argument(std::string("SPHMRA_MAX_NODES is not a positive integer: ") + env);
  }
  return 10'000'000;
}

std::int64_t grid_size(const SphereGeometry& geometry, int j, std::int64_t cap) {
  if (j < 1) {
    throw std::invalid_argument("grid level must be >= 1");
  }
  if (j > 40) {
    throw resource_error("grid level " + std::to_string(j) + " is out of range");
  }
  const std::int64_t side = (std::int64_t{1} << j) + 1;
  std::int64_t count = std::int64_t{1} << (j + 1);
  for (int nu = 1; nu < geometry.n(); ++nu) {
    if (count > cap / side + 1) {
      throw resource_error("grid N_" + std::to_string(j) + " on S^" + std::to_string(geometry.n()) +
                           " exceeds the node cap of " + std::to_string(cap));
    }
    count *= side;
  }
  if (count > cap) {
    throw resource_error("grid N_" + std::to_string(j) + " on S^" + std::to_string(geometry.n()) +
                         " has " + std::to_string(count) + " nodes, above the cap of " +
                         std::to_string(cap));
  }
  return count;
}

std::int64_t grid_size(const SphereGeometry& geometry, int j) {
  return grid_size(geometry, j, default_node_cap());
}

std::vector<GridNode> grid_nodes(const SphereGeometry& geometry, int j, std::int64_t cap) {
  const auto count = grid_size(geometry, j, cap);
  const int side = (1 << j) + 1;
  const int azimuths = 1 << (j + 1);
  std::vector<GridNode> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  std::vector<int> s(geometry.n() - 1, 0);
  while (true) {
    for (int t = 0; t < azimuths; ++t) {
      nodes.push_back({s, t, j});
    }
    int axis = static_cast<int>(s.size()) - 1;
    while (axis >= 0 && ++s[axis] == side) {
      s[axis] = 0;
      --axis;
    }
    if (axis < 0) {
      break;
    }
  }
  return nodes;
}

std::vector<GridNode> grid_nodes(const SphereGeometry& geometry, int j) {
  return grid_nodes(geometry, j, default_node_cap());
}

SphericalPoint node_point(const GridNode& node) {
  const double step = std::numbers::pi / static_cast<double>(std::int64_t{1} << node.level);
  SphericalPoint p;
  p.theta.reserve(node.s.size());
  for (int s : node.s) {
    p.theta.push_back(s * step);
  }
  p.phi = node.t * step;
  return p;
}

double level_weight(const SphereGeometry& geometry, int j, const GridNode& node) {
  const int n = geometry.n();
  if (static_cast<int>(node.s.size()) != n - 1) {
    throw std::invalid_argument("level_weight: node does not belong to this sphere");
  }
  const int M = 1 << j;
  double w = 1.0;
  for (int nu = 1; nu <= n - 1; ++nu) {
    const int s = node.s[nu - 1];
    if (s < 0 || s > M) {
      throw std::invalid_argument("level_weight: node index out of range for level j");
    }
    w *= cached_rule(M, n - nu)->weights[s];
  }
  return w;
}

std::vector<double> latitude_weights(const SphereGeometry& geometry, int j) {
  const int n = geometry.n();
  const int M = 1 << j;
  std::vector<double> out{1.0};
  for (int nu = 1; nu <= n - 1; ++nu) {
    const auto rule = cached_rule(M, n - nu);
    std::vector<double> next;
    next.reserve(out.size() * (M + 1));
    for (double w : out) {
      for (double chi : rule->weights) {
        next.push_back(w * chi);
      }
    }
    out = std::move(next);
  }
  return out;
}

} // namespace quadrature
} // namespace sphmra
