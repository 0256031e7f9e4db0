#include <doctest.h>

#include <cmath>
#include <random>

#include "sphmra/errors.hpp"
#include "sphmra/harmonics.hpp"
#include "sphmra/oracle.hpp"
#include "sphmra/uncertainty.hpp"

using namespace sphmra;
using doctest::Approx;

namespace {

ZonalSpectrum from_lambda(double lambda, std::vector<complex> c) { return {lambda, std::move(c)}; }

// The three defining integrals evaluated by dense quadrature on S^n for a
// zonal f around the north pole.
UncertaintyReport dense_report(const SphereGeometry& g, const ZonalSpectrum& spec) {
  const SphericalPoint pole{std::vector<double>(g.n() - 1, 0.0), 0.0};
  const oracle::IntegrationSpec is(g, 48);
  const auto f = [&](const SphericalPoint& x) { return specfun::zonal_eval(spec, dot(pole, x)); };
  const double energy =
      oracle::dense_integral([&](const SphericalPoint& x) { return complex{std::norm(f(x))}; }, is)
          .real();
  const double moment = std::abs(
      oracle::dense_integral(
          [&](const SphericalPoint& x) { return dot(pole, x) * std::norm(f(x)); }, is)
          .real());
  // |grad f|^2 = (1 - t^2) |f'(t)|^2 with f'(t) = sum c_l 2 lambda C_{l-1}^{lambda+1}(t)
  const double lambda = spec.lambda;
  const auto derivative = [&](double t) {
    complex s = 0.0;
    for (int l = 1; l <= spec.max_degree(); ++l) {
      s += spec.coeffs[l] * 2.0 * lambda * specfun::gegenbauer({lambda + 1, l - 1}, t);
    }
    return s;
  };
  const double gradient =
      oracle::dense_integral(
          [&](const SphericalPoint& x) {
            const double t = dot(pole, x);
            return complex{(1 - t * t) * std::norm(derivative(t))};
          },
          is)
          .real();
  UncertaintyReport r;
  r.var_space = std::pow(energy / moment, 2) - 1;
  r.var_momentum = gradient / energy;
  r.product = std::sqrt(r.var_space * r.var_momentum);
  return r;
}

} // namespace

TEST_SUITE("uncertainty") {
  TEST_CASE("variances of Phi_m") {
    const auto phi2 = uncertainty::phi_m_spectrum(2, 1.0);
    CHECK(uncertainty::var_space(phi2) == Approx(2.0625));
    CHECK(uncertainty::var_momentum(phi2) == Approx(6.0));
    const auto closed = uncertainty::phi_m_variances(2, 1.0);
    CHECK(closed.var_space == Approx(2.0625));
    CHECK(closed.var_momentum == Approx(6.0));
    const auto phi15 = uncertainty::phi_m_spectrum(15, 3.0);
    const auto direct = uncertainty::uncertainty_product(phi15);
    const auto formula = uncertainty::phi_m_variances(15, 3.0);
    CHECK(direct.var_space == Approx(formula.var_space).epsilon(1e-12));
    CHECK(direct.var_momentum == Approx(formula.var_momentum).epsilon(1e-12));
    CHECK(direct.product == Approx(formula.product).epsilon(1e-12));
  }

  TEST_CASE("frozen values from exact integration") {
    // f = C_0 + C_1/2 - 3 C_2/10 + C_3/5, integrals evaluated symbolically
    struct Case {
      double lambda, var_s, var_m, u;
    };
    const Case cases[] = {
        {0.5, 14.297258033254294456, 0.31004817618719889883, 2.1054307819750979171},
        {1.0, 21.644470868014268728, 1.5, 5.6979563267913350243},
        {1.5, 227.70560909549004787, 3.5896090265022303857, 28.589755329389572228},
    };
    for (const auto& c : cases) {
      const auto r = uncertainty::uncertainty_product(from_lambda(c.lambda, {1.0, 0.5, -0.3, 0.2}));
      INFO("lambda=" << c.lambda);
      CHECK(r.var_space == Approx(c.var_s).epsilon(1e-12));
      CHECK(r.var_momentum == Approx(c.var_m).epsilon(1e-12));
      CHECK(r.product == Approx(c.u).epsilon(1e-12));
    }
  }

  TEST_CASE("closed-form quotients against dense integration") {
    std::mt19937 rng(13);
    std::normal_distribution<double> normal;
    for (int n = 2; n <= 3; ++n) {
      const SphereGeometry g(n);
      for (int trial = 0; trial < 10; ++trial) {
        ZonalSpectrum spec{g.lambda(), {}};
        for (int l = 0; l <= 5; ++l) {
          spec.coeffs.emplace_back(normal(rng), normal(rng));
        }
        const auto fast = uncertainty::uncertainty_product(spec);
        const auto slow = dense_report(g, spec);
        INFO("n=" << n << " trial=" << trial);
        CHECK(fast.var_space == Approx(slow.var_space).epsilon(1e-8));
        CHECK(fast.var_momentum == Approx(slow.var_momentum).epsilon(1e-8));
        CHECK(fast.product == Approx(slow.product).epsilon(1e-8));
      }
    }
  }

  TEST_CASE("scale invariance") {
    const ZonalSpectrum base = from_lambda(1.0, {1.0, 0.4, {0.2, -0.1}, 0.3});
    const auto ref = uncertainty::uncertainty_product(base);
    for (complex c : {complex{2.0}, complex{-1.0}, complex{0.0, 3.0}}) {
      ZonalSpectrum scaled = base;
      for (auto& a : scaled.coeffs) {
        a *= c;
      }
      const auto r = uncertainty::uncertainty_product(scaled);
      CHECK(r.var_space == Approx(ref.var_space).epsilon(1e-13));
      CHECK(r.var_momentum == Approx(ref.var_momentum).epsilon(1e-13));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(uncertainty::var_space(from_lambda(0.5, {1.0})), degenerate_moment_error);
    CHECK_THROWS_AS(uncertainty::var_momentum(from_lambda(0.5, {0.0, 0.0})), std::domain_error);
    CHECK_THROWS_AS(uncertainty::gaussian_spectrum(1e-2, 0.5, 10), truncation_error);
  }

  TEST_CASE("Gaussian limit") {
    for (double lambda : {0.5, 1.0}) {
      const double t = 1e-4;
      const int L = uncertainty::gaussian_truncation(t, lambda);
      CHECK(std::exp(-t * L * (L + 2 * lambda) / 2) < 1e-12);
      CHECK(std::exp(-t * (L - 1) * (L - 1 + 2 * lambda) / 2) >= 1e-12);
      const auto r = uncertainty::uncertainty_product(uncertainty::gaussian_spectrum(t, lambda, L));
      CHECK(r.product == Approx(lambda + 0.5).epsilon(1e-3));
    }
  }

  TEST_CASE("asymptotic ratios") {
    const auto m_ratios = uncertainty::asymptotic_ratios_in_m(10000, 1.0);
    for (double r : m_ratios) {
      CHECK(r == Approx(1.0).epsilon(2e-2));
    }
    for (int m = 2; m <= 7; ++m) {
      for (double r : uncertainty::asymptotic_ratios_in_lambda(m, 1000.0)) {
        CHECK(r == Approx(1.0).epsilon(2e-2));
      }
    }
    // the printed m = 1 asymptotes overshoot var_S by 4 and U by 2
    const auto printed = uncertainty::asymptotic_ratios_in_lambda(1, 1000.0);
    CHECK(printed[0] == Approx(0.25).epsilon(1e-2));
    CHECK(printed[1] == Approx(1.0).epsilon(1e-2));
    CHECK(printed[2] == Approx(0.5).epsilon(1e-2));
    for (int m = 1; m <= 7; ++m) {
      for (double r : uncertainty::uniform_asymptotic_ratios_in_lambda(m, 1000.0)) {
        CHECK(r == Approx(1.0).epsilon(2e-2));
      }
    }
  }

  TEST_CASE("weighted binomial sum") {
    for (double lambda : {0.5, 1.0, 1.5, 2.0, 3.5}) {
      for (int m = 1; m <= 30; ++m) {
        CHECK(uncertainty::weighted_binomial_sum(m, lambda) ==
              Approx(uncertainty::weighted_binomial_closed_form(m, lambda)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("rounding helpers") {
    CHECK(uncertainty::round_half_away(2.125, 2) == Approx(2.13));
    CHECK(uncertainty::round_half_away(-2.5, 0) == -3.0);
    CHECK(uncertainty::decimals_of("2.12") == 2);
    CHECK(uncertainty::decimals_of("14") == 0);
    CHECK(uncertainty::format_rounded(4.9, 2) == "4.9");
    CHECK(uncertainty::format_rounded(3.0, 2) == "3");
  }

  TEST_CASE("published table") {
    CHECK(uncertainty::printed_table_ms().size() == 12);
    CHECK(uncertainty::printed_table_lambdas().size() == 6);
    const auto cell = uncertainty::printed_table_entry(1, 0.5);
    REQUIRE(cell.has_value());
    CHECK((*cell)[2] == "2.12");
    const int ms[] = {1, 2};
    const double lambdas[] = {0.5};
    const auto rows = uncertainty::uncertainty_table(ms, lambdas);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].cell_matches());
    CHECK(rows[0].rounded[2] == "2.12");
    const auto csv = uncertainty::table_csv(rows);
    CHECK(csv.rfind("m,lambda,var_S,var_M,U,", 0) == 0);
    CHECK(csv.find("1,0.5,3,1.5,2.1213203435596424") != std::string::npos);
  }
}
