#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphmra/specfun.hpp"

namespace sphmra {

struct UncertaintyReport {
  double var_space = 0.0;
  double var_momentum = 0.0;
  double product = 0.0;
};

namespace uncertainty {

/// (1/sigma_n) int |f|^2 dsigma for a zonal f given by its Gegenbauer
/// coefficients.
double energy(const ZonalSpectrum& spec);

/// (1/sigma_n) |int x |f(x)|^2 dsigma(x)|, the first moment along the pole.
double first_moment(const ZonalSpectrum& spec);

/// (energy / first_moment)^2 - 1. Throws degenerate_moment_error when the first
/// moment is below 1e-14 in magnitude.
double var_space(const ZonalSpectrum& spec);

/// sum_l l(l+2 lambda) lambda/(l+lambda) C_l(1) |f(l)|^2 / energy.
/// Throws std::domain_error for the zero function.
double var_momentum(const ZonalSpectrum& spec);

UncertaintyReport uncertainty_product(const ZonalSpectrum& spec);

/// Phi_m = sum_{l<=m} (l+lambda)/lambda C_l^lambda (up to scale).
ZonalSpectrum phi_m_spectrum(int m, double lambda);

/// Closed forms var_S = ((2m+2 lambda+1)/(2m))^2 - 1 and
/// var_M = m(m+2 lambda+1)(2 lambda+1)/(2 lambda+3).
UncertaintyReport phi_m_variances(int m, double lambda);

/// Printed entry of the published table for (m, lambda) as strings
/// (var_S, var_M, U), if that cell was published.
std::optional<std::array<std::string, 3>> printed_table_entry(int m, double lambda);

/// m and lambda values of the published table.
std::vector<int> printed_table_ms();
std::vector<double> printed_table_lambdas();

/// Round half away from zero to `decimals` places.
double round_half_away(double value, int decimals);

/// Number of decimals in a printed decimal string ("2.12" -> 2, "14" -> 0).
int decimals_of(const std::string& printed);

/// Renders a rounded value without trailing zeros ("4.90" -> "4.9").
std::string format_rounded(double value, int decimals);

struct TableRow {
  int m = 0;
  double lambda = 0.0;
  UncertaintyReport report;
  std::array<std::string, 3> rounded;  // rounded to the printed digit counts
  std::optional<std::array<std::string, 3>> printed;
  std::array<bool, 3> value_matches{true, true, true};

  bool cell_matches() const;
};

std::vector<TableRow> uncertainty_table(std::span<const int> ms, std::span<const double> lambdas);

/// Full-precision and rounded columns as CSV (header included), 17
/// significant digits for the full-precision values.
std::string table_csv(std::span<const TableRow> rows);

/// Ratios exact / asymptote for m -> infinity:
/// var_S ~ (2 lambda+1)/m, var_M ~ (2 lambda+1) m^2/(2 lambda+3),
/// U ~ (2 lambda+1) m^(1/2) / sqrt(2 lambda+3).
std::array<double, 3> asymptotic_ratios_in_m(int m, double lambda);

/// Ratios exact / asymptote for lambda -> infinity:
/// var_S ~ 4 lambda^2 (m = 1) or lambda^2/m^2, var_M ~ 2 m lambda,
/// U ~ (2 lambda)^(3/2) (m = 1) or (2/m)^(1/2) lambda^(3/2).
std::array<double, 3> asymptotic_ratios_in_lambda(int m, double lambda);

/// The same with the m > 1 asymptotes used for every m. The exact variances
/// of Phi_1 follow var_S ~ lambda^2 and U ~ 2^(1/2) lambda^(3/2), a factor 4
/// and 2 below the printed m = 1 special case.
std::array<double, 3> uniform_asymptotic_ratios_in_lambda(int m, double lambda);

/// Smallest L with exp(-t L (L + 2 lambda)/2) < 1e-12.
int gaussian_truncation(double t, double lambda);

/// Truncated Gaussian measure sum_l exp(-t l(l+2 lambda)/2) (l+lambda)/lambda C_l^lambda.
/// Throws truncation_error when L is below gaussian_truncation(t, lambda).
ZonalSpectrum gaussian_spectrum(double t, double lambda, int truncation);

/// sum_{l=1}^m (l+lambda) binom(l+2 lambda, l-1), summed term by term.
double weighted_binomial_sum(int m, double lambda);

/// (2m+2 lambda+1)(m+2 lambda+1)! (lambda+1) / ((m-1)! (2 lambda+3)!).
double weighted_binomial_closed_form(int m, double lambda);

} // namespace uncertainty
} // namespace sphmra
