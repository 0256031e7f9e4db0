#include <doctest.h>

#include <random>

#include "sphmra/harmonics.hpp"
#include "sphmra/mra.hpp"
#include "sphmra/posdef.hpp"

using namespace sphmra;

namespace {

std::vector<SphericalPoint> random_points(int n, int count, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  std::vector<SphericalPoint> out;
  for (int i = 0; i < count; ++i) {
    std::vector<double> x(n + 1);
    double s = 0.0;
    for (double& v : x) {
      v = normal(rng);
      s += v * v;
    }
    for (double& v : x) {
      v /= std::sqrt(s);
    }
    out.push_back(from_cartesian(x));
  }
  return out;
}

} // namespace

TEST_SUITE("posdef") {
  TEST_CASE("classification") {
    auto c = posdef::classify({0.5, {1.0, 1.0, 1.0}});
    CHECK(c.semidefinite);
    CHECK(c.strict_up_to_cardinality == 3);
    CHECK_FALSE(c.strictly_pd);
    CHECK(c.reason == "finite expansion");

    c = posdef::classify({0.5, {1.0, -0.5}});
    CHECK_FALSE(c.semidefinite);
    CHECK(c.strict_up_to_cardinality == 0);

    c = posdef::classify({1.0, {1.0, 0.0, 2.0}});
    CHECK(c.semidefinite);
    CHECK(c.strict_up_to_cardinality == 1);

    c = posdef::classify({1.0, {1.0, complex{0.0, 1.0}}});
    CHECK_FALSE(c.semidefinite);

    c = posdef::classify({1.0, {1.0, -1e-15}});
    CHECK(c.semidefinite);
    CHECK(c.strict_up_to_cardinality == 1);
  }

  TEST_CASE("scaling functions are semidefinite") {
    for (int n = 2; n <= 4; ++n) {
      const SphereGeometry g(n);
      for (int j = 1; j <= 4; ++j) {
        const auto c = posdef::classify(mra::scaling_zonal(g, j));
        CHECK(c.semidefinite);
        CHECK(c.strict_up_to_cardinality == mra::max_degree(j) + 1);
        CHECK_FALSE(c.strictly_pd);
        CHECK(posdef::classify(mra::wavelet_zonal(g, j)).strict_up_to_cardinality == 0);
      }
    }
  }

  TEST_CASE("classification agrees with Gramians") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> coeff(-0.3, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + trial % 2;
      const SphereGeometry g(n);
      ZonalSpectrum spec{g.lambda(), {}};
      for (int l = 0; l <= 4; ++l) {
        spec.coeffs.emplace_back(coeff(rng));
      }
      const auto c = posdef::classify(spec);
      const auto pts = random_points(n, 30, rng);
      const double min_eig = posdef::gramian_min_eigenvalue(spec, pts);
      INFO("trial=" << trial);
      if (c.semidefinite) {
        CHECK(min_eig >= -1e-10);
      }
    }
  }

  TEST_CASE("a negative coefficient shows up in some Gramian") {
    // The degree-l harmonics restricted to many points span enough directions
    // for a negative a_l to produce a negative eigenvalue.
    std::mt19937 rng(29);
    for (int l = 0; l <= 4; ++l) {
      const SphereGeometry g(2);
      ZonalSpectrum spec{g.lambda(), std::vector<complex>(5, 0.0)};
      spec.coeffs[l] = -1.0;
      CHECK_FALSE(posdef::classify(spec).semidefinite);
      CHECK(posdef::gramian_min_eigenvalue(spec, random_points(2, 40, rng)) < -1e-6);
    }
  }

  TEST_CASE("Gramian size limit") {
    std::mt19937 rng(1);
    CHECK_THROWS_AS(posdef::gramian_min_eigenvalue({0.5, {1.0}}, random_points(2, 501, rng)),
                    std::invalid_argument);
  }
}
