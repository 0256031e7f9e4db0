#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "sphmra/errors.hpp"
#include "sphmra/quadrature.hpp"

using namespace sphmra;
using doctest::Approx;

namespace {

void check_weights(const QuadratureRule& rule, const std::vector<double>& expected) {
  REQUIRE(rule.weights.size() == expected.size());
  for (std::size_t u = 0; u < expected.size(); ++u) {
    INFO("u=" << u);
    CHECK(rule.weights[u] == Approx(expected[u]).epsilon(1e-13).scale(1.0));
  }
}

} // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("small rules") {
    check_weights(quadrature::make_rule(2, 1), {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0});
    check_weights(quadrature::make_rule(2, 2),
                  {std::numbers::pi / 16, 3 * std::numbers::pi / 8, std::numbers::pi / 16});
  }

  TEST_CASE("rules frozen from exact moment matching") {
    // Weights solving the Vandermonde system on exact moments in rational
    // arithmetic.
    check_weights(quadrature::make_rule(4, 3),
                  {-0.019047619047619047619, 0.30476190476190476190, 0.76190476190476190476,
                   0.30476190476190476190, -0.019047619047619047619});
    check_weights(quadrature::make_rule(3, 2),
                  {0.0, 0.78539816339744830962, 0.78539816339744830962, 0.0});
    check_weights(quadrature::make_rule(8, 1),
                  {0.015873015873015873016, 0.14621864921601815501, 0.27936507936507936508,
                   0.36171785872048978150, 0.39365079365079365079, 0.36171785872048978150,
                   0.27936507936507936508, 0.14621864921601815501, 0.015873015873015873016});
  }

  TEST_CASE("nodes") {
    const auto rule = quadrature::make_rule(4, 2);
    CHECK(rule.node(0) == 1.0);
    CHECK(rule.node(2) == Approx(0.0).scale(1.0));
    CHECK(rule.node(4) == -1.0);
  }

  TEST_CASE("symmetry and total mass") {
    for (int M : {1, 2, 5, 8, 16, 33}) {
      for (int alpha = 1; alpha <= 6; ++alpha) {
        const auto rule = quadrature::make_rule(M, alpha);
        double total = 0.0;
        for (int u = 0; u <= M; ++u) {
          CHECK(rule.weights[u] == Approx(rule.weights[M - u]).epsilon(1e-12).scale(1.0));
          total += rule.weights[u];
        }
        CHECK(total == Approx(quadrature::single_frequency_integral(0, alpha)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("exactness on monomials") {
    for (int M : {4, 8, 16}) {
      for (int alpha = 1; alpha <= 5; ++alpha) {
        const auto rule = quadrature::make_rule(M, alpha);
        for (int d = 0; d <= M; ++d) {
          std::vector<complex> samples;
          for (int u = 0; u <= M; ++u) {
            samples.emplace_back(std::pow(rule.node(u), d));
          }
          // int_0^pi cos^d t sin^alpha t dt = B((d+1)/2, (alpha+1)/2) for even d, 0 for odd d
          double exact = 0.0;
          if (d % 2 == 0) {
            exact = std::exp(std::lgamma((d + 1) / 2.0) + std::lgamma((alpha + 1) / 2.0) -
                             std::lgamma((d + alpha + 2) / 2.0));
          }
          INFO("M=" << M << " alpha=" << alpha << " d=" << d);
          CHECK(std::abs(quadrature::integrate(rule, samples) - exact) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("cached rules are shared") {
    const auto a = quadrature::cached_rule(16, 3);
    const auto b = quadrature::cached_rule(16, 3);
    CHECK(a.get() == b.get());
    CHECK(a->weights == quadrature::make_rule(16, 3).weights);
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(quadrature::make_rule(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(quadrature::make_rule(4, -1), std::invalid_argument);
  }

  TEST_CASE("single-frequency integrals") {
    CHECK(quadrature::single_frequency_integral(0, 1) == Approx(2.0));
    CHECK(quadrature::single_frequency_integral(1, 1) == Approx(0.0).scale(1.0));
    CHECK(quadrature::single_frequency_integral(2, 1) == Approx(-2.0 / 3.0));
    CHECK(quadrature::single_frequency_integral(0, 2) == Approx(std::numbers::pi / 2));
    CHECK(quadrature::single_frequency_integral(2, 2) == Approx(-std::numbers::pi / 4));
    CHECK(quadrature::single_frequency_integral(4, 2) == Approx(0.0).scale(1.0));
  }

  TEST_CASE("cosine transform") {
    const int M = 8;
    std::vector<double> a{0.5, -1.0, 0.25, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0};
    std::vector<double> samples;
    for (int u = 0; u <= M; ++u) {
      samples.push_back(quadrature::cosine_series(a, u * std::numbers::pi / M));
    }
    const auto back = quadrature::dct_i(samples);
    for (int mu = 0; mu <= M; ++mu) {
      CHECK(back[mu] == Approx(a[mu]).scale(1.0).epsilon(1e-13));
    }
  }

  TEST_CASE("grid sizes") {
    CHECK(quadrature::grid_size(SphereGeometry(2), 1) == 12);
    CHECK(quadrature::grid_size(SphereGeometry(3), 1) == 36);
    CHECK(quadrature::grid_size(SphereGeometry(2), 2) == 40);
    CHECK(quadrature::grid_nodes(SphereGeometry(3), 2).size() == 25 * 8);
    CHECK_THROWS_AS(quadrature::grid_size(SphereGeometry(2), 3, 100), resource_error);
    CHECK_THROWS_AS(quadrature::grid_size(SphereGeometry(6), 10), resource_error);
  }

  TEST_CASE("grid order and points") {
    const auto nodes = quadrature::grid_nodes(SphereGeometry(3), 1);
    CHECK(nodes.front().s == std::vector<int>{0, 0});
    CHECK(nodes.front().t == 0);
    CHECK(nodes[1].t == 1);
    CHECK(nodes[4].s == std::vector<int>{0, 1});
    CHECK(nodes.back().s == std::vector<int>{2, 2});
    CHECK(nodes.back().t == 3);
    const auto p = quadrature::node_point(nodes[5]);
    CHECK(p.theta[0] == 0.0);
    CHECK(p.theta[1] == Approx(std::numbers::pi / 2));
    CHECK(p.phi == Approx(std::numbers::pi / 2));
  }

  TEST_CASE("level weights") {
    const SphereGeometry g(2);
    CHECK(quadrature::level_weight(g, 1, GridNode{{1}, 0, 1}) == Approx(4.0 / 3.0));
    const SphereGeometry g3(3);
    CHECK(quadrature::level_weight(g3, 1, GridNode{{1, 1}, 0, 1}) ==
          Approx(3 * std::numbers::pi / 8 * 4.0 / 3.0));
    const auto lat = quadrature::latitude_weights(g3, 1);
    CHECK(lat.size() == 9);
    CHECK(lat[4] == Approx(std::numbers::pi / 2));
    // Summed over the whole grid the weights integrate 1 to sigma_n / pi * 2^j.
    for (int n = 2; n <= 4; ++n) {
      const SphereGeometry gn(n);
      for (int j = 1; j <= 3; ++j) {
        double total = 0.0;
        for (double w : quadrature::latitude_weights(gn, j)) {
          total += w;
        }
        total *= std::ldexp(1.0, j + 1) * std::numbers::pi / std::ldexp(1.0, j);
        CHECK(total == Approx(gn.sigma_n()).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("node cap from the environment") {
    ::setenv("SPHMRA_MAX_NODES", "50", 1);
    CHECK(quadrature::default_node_cap() == 50);
    CHECK(quadrature::grid_size(SphereGeometry(2), 2) == 40);
    CHECK_THROWS_AS(quadrature::grid_size(SphereGeometry(2), 3), resource_error);
    ::setenv("SPHMRA_MAX_NODES", "lots", 1);
    CHECK_THROWS_AS(quadrature::default_node_cap(), std::invalid_argument);
    ::unsetenv("SPHMRA_MAX_NODES");
    CHECK(quadrature::default_node_cap() == 10000000);
  }
}
