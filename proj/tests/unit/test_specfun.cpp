#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "sphmra/errors.hpp"
#include "sphmra/oracle.hpp"
#include "sphmra/specfun.hpp"

using namespace sphmra;
using doctest::Approx;

namespace {

// int_{-1}^{1} g(t) (1-t^2)^(lambda-1/2) dt, substituted t = cos(theta).
double weighted_integral(const std::function<double(double)>& g, double lambda) {
  const auto f = [&](double theta) {
    return g(std::cos(theta)) * std::pow(std::sin(theta), 2 * lambda);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi,
                                                                       3, 1e-13);
}

} // namespace

TEST_SUITE("specfun") {
  TEST_CASE("gegenbauer small cases") {
    CHECK(specfun::gegenbauer({1.5, 0}, 0.3) == 1.0);
    CHECK(specfun::gegenbauer({0.5, 1}, 0.5) == Approx(0.5));
    CHECK(specfun::gegenbauer({1.0, 2}, 0.0) == Approx(-1.0));
    CHECK(specfun::gegenbauer({1.0, 2}, 1.0) == Approx(3.0));
  }

  TEST_CASE("gegenbauer against frozen high-precision values") {
    // mpmath.gegenbauer at 30 digits
    CHECK(specfun::gegenbauer({1.5, 7}, 0.3) == Approx(-1.33934596875000020020).epsilon(1e-13));
    CHECK(specfun::gegenbauer({2.5, 20}, -0.77) == Approx(59.4344179316077405915).epsilon(1e-12));
    CHECK(specfun::gegenbauer({0.5, 64}, 0.91) == Approx(-0.0125374158675160299503).epsilon(1e-11));
  }

  TEST_CASE("gegenbauer rejects arguments outside [-1, 1]") {
    CHECK_THROWS_AS(specfun::gegenbauer({1.0, 3}, 1.01), std::domain_error);
    CHECK_NOTHROW(specfun::gegenbauer({1.0, 3}, 1.0 + 1e-14));
    CHECK_THROWS_AS(GegenbauerParams(0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(GegenbauerParams(1.0, -1), std::invalid_argument);
  }

  TEST_CASE("endpoint value in closed form") {
    CHECK(specfun::gegenbauer_at_one({2.5, 0}) == 1.0);
    CHECK(specfun::gegenbauer_at_one({1.0, 2}) == Approx(3.0));
    CHECK(specfun::gegenbauer_at_one({0.5, 3}) == Approx(1.0));
    for (double lambda : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 0.7}) {
      for (int l = 0; l <= 200; l += 7) {
        CHECK(specfun::gegenbauer_at_one({lambda, l}) ==
              Approx(specfun::gegenbauer({lambda, l}, 1.0)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("recurrence matches the generating-function expansion") {
    for (double lambda : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
      for (int l = 0; l <= oracle::generating_function_max_degree; ++l) {
        const double scale = specfun::gegenbauer_at_one({lambda, l});
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
          const double t = -1.0 + 0.02 * i;
          const double a = specfun::gegenbauer({lambda, l}, t);
          const double b = oracle::generating_function_gegenbauer(lambda, l, t);
          worst = std::max(worst, std::abs(a - b) / scale);
        }
        INFO("lambda=" << lambda << " l=" << l);
        CHECK(worst <= 1e-9);
      }
    }
  }

  TEST_CASE("gegenbauer_all agrees with single evaluations") {
    const auto all = specfun::gegenbauer_all(1.5, 30, -0.4);
    REQUIRE(all.size() == 31);
    for (int l = 0; l <= 30; ++l) {
      CHECK(all[l] == Approx(specfun::gegenbauer({1.5, l}, -0.4)).epsilon(1e-14));
    }
  }

  TEST_CASE("one-dimensional norms") {
    CHECK(specfun::gegenbauer_norm_1d({0.5, 0}) == Approx(2.0));
    CHECK(specfun::gegenbauer_norm_1d({0.5, 1}) == Approx(2.0 / 3.0));
    CHECK(specfun::gegenbauer_norm_1d({1.0, 2}) == Approx(std::numbers::pi / 2));
  }

  TEST_CASE("orthogonality and norms against numerical integration") {
    for (double lambda : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
      for (int l = 0; l <= 32; l += 3) {
        const double nl = specfun::gegenbauer_norm_1d({lambda, l});
        for (int k = l; k <= 32; k += 5) {
          const double value = weighted_integral(
              [&](double t) {
                return specfun::gegenbauer({lambda, l}, t) * specfun::gegenbauer({lambda, k}, t);
              },
              lambda);
          INFO("lambda=" << lambda << " l=" << l << " k=" << k);
          if (k == l) {
            CHECK(value == Approx(nl).epsilon(1e-10));
          } else {
            const double nk = specfun::gegenbauer_norm_1d({lambda, k});
            CHECK(std::abs(value) / std::sqrt(nl * nk) <= 1e-9);
          }
        }
      }
    }
  }

  TEST_CASE("log-gamma route avoids overflow") {
    const double log_norm = specfun::log_gegenbauer_norm_1d({3.0, 400});
    CHECK(std::isfinite(log_norm));
    CHECK(std::isfinite(specfun::gegenbauer_at_one({3.0, 300})));
    CHECK(specfun::reciprocal_gamma(-2.0) == 0.0);
    CHECK(specfun::reciprocal_gamma(0.0) == 0.0);
    CHECK(specfun::reciprocal_gamma(-0.5) == Approx(-1.0 / (2.0 * std::sqrt(std::numbers::pi))));
    CHECK_THROWS(specfun::log_gamma(-1.0));
  }

  TEST_CASE("coefficient extraction") {
    SUBCASE("C_2 itself") {
      const auto z = specfun::gegenbauer_coefficients(
          [](double t) { return complex{specfun::gegenbauer({1.5, 2}, t)}; }, 1.5, 2);
      CHECK(std::abs(z.coeffs[0]) < 1e-12);
      CHECK(std::abs(z.coeffs[1]) < 1e-12);
      CHECK(z.coeffs[2].real() == Approx(1.0));
    }
    SUBCASE("constant") {
      const auto z = specfun::gegenbauer_coefficients([](double) { return complex{1.0}; }, 2.0, 4);
      CHECK(z.coeffs[0].real() == Approx(1.0));
      for (int l = 1; l <= 4; ++l) {
        CHECK(std::abs(z.coeffs[l]) < 1e-12);
      }
    }
    SUBCASE("identity for lambda = 1/2") {
      const auto z = specfun::gegenbauer_coefficients([](double t) { return complex{t}; }, 0.5, 3);
      CHECK(z.coeffs[1].real() == Approx(1.0));
      CHECK(std::abs(z.coeffs[0]) + std::abs(z.coeffs[2]) + std::abs(z.coeffs[3]) < 1e-12);
    }
    SUBCASE("round trip through zonal_eval") {
      for (double lambda : {0.5, 1.0, 2.5}) {
        ZonalSpectrum spec{lambda, {{0.3, 0.1}, {-1.2, 0.0}, {0.7, -0.4}, {0.0, 0.0}, {2.0, 1.0}}};
        const auto back = specfun::gegenbauer_coefficients(
            [&](double t) { return specfun::zonal_eval(spec, t); }, lambda, 4);
        for (int l = 0; l <= 4; ++l) {
          CHECK(std::abs(back.coeffs[l] - spec.coeffs[l]) <= 1e-10);
        }
      }
    }
    SUBCASE("non-polynomial input is reported") {
      CHECK_THROWS_AS(specfun::gegenbauer_coefficients(
                          [](double t) { return complex{std::exp(3 * t)}; }, 1.0, 3),
                      convergence_error);
    }
  }

  TEST_CASE("zonal evaluation") {
    CHECK(specfun::zonal_eval({1.0, {1.0, 0.0}}, 0.4).real() == Approx(1.0));
    CHECK(specfun::zonal_eval({0.5, {0.0, 1.0}}, 0.25).real() == Approx(0.25));
    // scaling function at level 1 on S^2: 2^(-1) C_0
    CHECK(specfun::zonal_eval({0.5, {0.5}}, -0.7).real() == Approx(0.5));
    CHECK_THROWS_AS(specfun::zonal_eval({0.5, {1.0}}, 1.5), std::domain_error);
  }
}
