#include "sphmra/uncertainty.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sphmra/errors.hpp"

namespace sphmra::uncertainty {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

void check_lambda(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive");
  }
}

// binom(l + 2 lambda - 1, l) = C_l^lambda(1)
double at_one(double lambda, int l) { return specfun::binomial(l + 2 * lambda - 1, l); }

using Row = std::array<const char*, 3>;

struct PrintedRow {
  int m;
  std::array<Row, 6> cells;  // lambda = 0.5, 1, ..., 3
};

// The published table, transcribed cell by cell.
const std::array<PrintedRow, 12> printed_rows{{
    {1, {{{"3", "1.5", "2.12"}, {"5.25", "2.4", "3.55"}, {"8", "3.33", "5.16"}, {"11.3", "4.29", "6.94"}, {"15", "5.25", "8.87"}, {"19.3", "6.22", "10.94"}}}},
    {2, {{{"1.25", "4", "2.24"}, {"2.06", "6", "3.52"}, {"3", "8", "4.9"}, {"4.06", "10", "6.37"}, {"5.25", "12", "7.94"}, {"6.56", "14", "9.59"}}}},
    {3, {{{"0.78", "7.5", "2.42"}, {"1.25", "10.8", "3.67"}, {"1.78", "14", "4.99"}, {"2.36", "17.14", "6.36"}, {"3", "20.25", "7.79"}, {"3.69", "23.33", "9.29"}}}},
    {4, {{{"0.56", "12", "2.6"}, {"0.89", "16.8", "3.87"}, {"1.25", "21.33", "5.16"}, {"1.64", "25.71", "6.5"}, {"2.06", "30", "7.87"}, {"2.52", "34.22", "9.28"}}}},
    {5, {{{"0.44", "17.5", "2.78"}, {"0.69", "24", "4.07"}, {"0.96", "30", "5.37"}, {"1.25", "35.71", "6.68"}, {"1.56", "41.25", "8.02"}, {"1.89", "46.67", "9.39"}}}},
    {6, {{{"0.36", "24", "2.94"}, {"0.56", "32.4", "4.27"}, {"0.78", "40", "5.58"}, {"1.01", "47.14", "6.89"}, {"1.25", "54", "8.22"}, {"1.51", "60.67", "9.56"}}}},
    {7, {{{"0.31", "31.5", "3.11"}, {"0.47", "42", "4.46"}, {"0.65", "51.33", "5.79"}, {"0.84", "60", "7.11"}, {"1.04", "68.25", "8.43"}, {"1.25", "76.22", "9.76"}}}},
    {15, {{{"0.14", "127.5", "4.19"}, {"0.21", "162", "5.83"}, {"0.28", "190", "7.35"}, {"0.36", "214.29", "8.8"}, {"0.44", "236.25", "10.2"}, {"0.52", "256.67", "11.57"}}}},
    {31, {{{"0.07", "511.5", "5.79"}, {"0.1", "632.4", "7.92"}, {"0.13", "723.33", "9.82"}, {"0.17", "797.14", "11.57"}, {"0.2", "860.25", "13.21"}, {"0.24", "916.22", "14.78"}}}},
    {63, {{{"0.03", "2047.5", "8.01"}, {"0.05", "2494.8", "10.99"}, {"0.06", "2814", "13.47"}, {"0.08", "3060", "15.74"}, {"0.1", "3260.25", "17.83"}, {"0.11", "3430", "19.79"}}}},
    {127, {{{"0.02", "8191.5", "11.38"}, {"0.02", "9906", "15.34"}, {"0.03", "11091.3", "18.76"}, {"0.04", "11974.3", "21.82"}, {"0.05", "12668.3", "24.61"}, {"0.06", "13236.2", "27.2"}}}},
    {255, {{{"0.01", "32767.5", "16.05"}, {"0.01", "39474", "21.58"}, {"0.02", "44030", "26.33"}, {"0.02", "47357.1", "30.55"}, {"0.02", "49916.3", "34.37"}, {"0.03", "51963", "37.9"}}}},
}};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

double energy(const ZonalSpectrum& spec) {
  check_lambda(spec.lambda);
  const double lambda = spec.lambda;
  CompensatedSum sum;
  for (int l = 0; l <= spec.max_degree(); ++l) {
    sum.add(lambda / (l + lambda) * at_one(lambda, l) * std::norm(spec.coeffs[l]));
  }
  return sum.value();
}

double first_moment(const ZonalSpectrum& spec) {
  check_lambda(spec.lambda);
  const double lambda = spec.lambda;
  CompensatedSum sum;
  for (int l = 0; l < spec.max_degree(); ++l) {
    const double cross = 2.0 * std::real(std::conj(spec.coeffs[l]) * spec.coeffs[l + 1]);
    if (cross == 0.0) {
      continue;
    }
    sum.add(specfun::binomial(l + 2 * lambda, l) * lambda * lambda * cross /
            ((l + lambda) * (l + lambda + 1)));
  }
  return std::abs(sum.value());
}

double var_space(const ZonalSpectrum& spec) {
  const double moment = first_moment(spec);
  if (moment < 1e-14) {
    throw degenerate_moment_error("first moment vanishes; the space variance is undefined");
  }
  const double ratio = energy(spec) / moment;
  return ratio * ratio - 1.0;
}

double var_momentum(const ZonalSpectrum& spec) {
  const double e = energy(spec);
  if (!(e > 0.0)) {
    throw std::domain_error("momentum variance of the zero function is undefined");
  }
  const double lambda = spec.lambda;
  CompensatedSum sum;
  for (int l = 1; l <= spec.max_degree(); ++l) {
    sum.add(l * lambda * (l + 2 * lambda) / (l + lambda) * at_one(lambda, l) *
            std::norm(spec.coeffs[l]));
  }
  return sum.value() / e;
}

UncertaintyReport uncertainty_product(const ZonalSpectrum& spec) {
  UncertaintyReport r;
  r.var_space = var_space(spec);
  r.var_momentum = var_momentum(spec);
  r.product = std::sqrt(r.var_space) * std::sqrt(r.var_momentum);
  return r;
}

ZonalSpectrum phi_m_spectrum(int m, double lambda) {
  check_lambda(lambda);
  if (m < 0) {
    throw std::invalid_argument("m must be non-negative");
  }
  ZonalSpectrum z{lambda, {}};
  for (int l = 0; l <= m; ++l) {
    z.coeffs.emplace_back((l + lambda) / lambda);
  }
  return z;
}

UncertaintyReport phi_m_variances(int m, double lambda) {
  check_lambda(lambda);
  if (m < 1) {
    throw std::invalid_argument("m must be >= 1");
  }
  const double q = (2.0 * m + 2 * lambda + 1) / (2.0 * m);
  UncertaintyReport r;
  r.var_space = q * q - 1.0;
  r.var_momentum = m * (m + 2 * lambda + 1) * (2 * lambda + 1) / (2 * lambda + 3);
  r.product = std::sqrt(r.var_space) * std::sqrt(r.var_momentum);
  return r;
}

std::optional<std::array<std::string, 3>> printed_table_entry(int m, double lambda) {
  const double col = 2.0 * lambda - 1.0;
  if (std::abs(col - std::round(col)) > 1e-12 || col < -0.5 || col > 5.5) {
    return std::nullopt;
  }
  for (const auto& row : printed_rows) {
    if (row.m == m) {
      const auto& c = row.cells[static_cast<std::size_t>(std::lround(col))];
      return std::array<std::string, 3>{c[0], c[1], c[2]};
    }
  }
  return std::nullopt;
}

std::vector<int> printed_table_ms() {
  std::vector<int> ms;
  for (const auto& row : printed_rows) {
    ms.push_back(row.m);
  }
  return ms;
}

std::vector<double> printed_table_lambdas() { return {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}; }

double round_half_away(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

int decimals_of(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

std::string format_rounded(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_away(value, decimals));
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') {
      s.pop_back();
    }
    if (s.back() == '.') {
      s.pop_back();
    }
  }
  return s;
}

bool TableRow::cell_matches() const {
  return !printed || (value_matches[0] && value_matches[1] && value_matches[2]);
}

std::vector<TableRow> uncertainty_table(std::span<const int> ms, std::span<const double> lambdas) {
  std::vector<TableRow> rows;
  for (int m : ms) {
    for (double lambda : lambdas) {
      TableRow row;
      row.m = m;
      row.lambda = lambda;
      row.report = phi_m_variances(m, lambda);
      row.printed = printed_table_entry(m, lambda);
      const std::array<double, 3> values{row.report.var_space, row.report.var_momentum,
                                         row.report.product};
      for (int c = 0; c < 3; ++c) {
        const int decimals = row.printed ? decimals_of((*row.printed)[c]) : 2;
        row.rounded[c] = format_rounded(values[c], decimals);
        if (row.printed) {
          row.value_matches[c] =
              std::abs(round_half_away(values[c], decimals) - std::stod((*row.printed)[c])) <
              0.5 * std::pow(10.0, -decimals);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string table_csv(std::span<const TableRow> rows) {
  std::ostringstream out;
  out << "m,lambda,var_S,var_M,U,var_S_rounded,var_M_rounded,U_rounded,"
         "printed_var_S,printed_var_M,printed_U,match\n";
  for (const auto& row : rows) {
    out << row.m << ',' << fmt17(row.lambda) << ',' << fmt17(row.report.var_space) << ','
        << fmt17(row.report.var_momentum) << ',' << fmt17(row.report.product);
    for (const auto& r : row.rounded) {
      out << ',' << r;
    }
    for (int c = 0; c < 3; ++c) {
      out << ',' << (row.printed ? (*row.printed)[c] : "");
    }
    out << ',' << (row.printed ? (row.cell_matches() ? "yes" : "no") : "") << '\n';
  }
  return out.str();
}

std::array<double, 3> asymptotic_ratios_in_m(int m, double lambda) {
  const auto r = phi_m_variances(m, lambda);
  const double a = 2 * lambda + 1;
  const double b = 2 * lambda + 3;
  return {r.var_space / (a / m), r.var_momentum / (a * m * static_cast<double>(m) / b),
          r.product / (a * std::sqrt(static_cast<double>(m)) / std::sqrt(b))};
}

std::array<double, 3> asymptotic_ratios_in_lambda(int m, double lambda) {
  const auto r = phi_m_variances(m, lambda);
  const double s = m == 1 ? 4 * lambda * lambda : lambda * lambda / (static_cast<double>(m) * m);
  const double u = m == 1 ? std::pow(2 * lambda, 1.5) : std::sqrt(2.0 / m) * std::pow(lambda, 1.5);
  return {r.var_space / s, r.var_momentum / (2.0 * m * lambda), r.product / u};
}

std::array<double, 3> uniform_asymptotic_ratios_in_lambda(int m, double lambda) {
  const auto r = phi_m_variances(m, lambda);
  const double s = lambda * lambda / (static_cast<double>(m) * m);
  const double u = std::sqrt(2.0 / m) * std::pow(lambda, 1.5);
  return {r.var_space / s, r.var_momentum / (2.0 * m * lambda), r.product / u};
}

int gaussian_truncation(double t, double lambda) {
  check_lambda(lambda);
  if (!(t > 0.0)) {
    throw std::invalid_argument("Gaussian parameter t must be positive");
  }
  // t L (L + 2 lambda) / 2 > 12 ln 10
  const double rhs = 24.0 * std::log(10.0) / t;
  double L = std::floor(-lambda + std::sqrt(lambda * lambda + rhs));
  if (L > 1e7) {
    throw resource_error("Gaussian truncation exceeds 1e7 terms");
  }
  int n = std::max(0, static_cast<int>(L) - 1);
  while (std::exp(-t * n * (n + 2 * lambda) / 2) >= 1e-12) {
    ++n;
  }
  return n;
}

ZonalSpectrum gaussian_spectrum(double t, double lambda, int truncation) {
  const int needed = gaussian_truncation(t, lambda);
  if (truncation < needed) {
    throw truncation_error("truncation " + std::to_string(truncation) +
                           " leaves a tail above 1e-12; need at least " + std::to_string(needed));
  }
  ZonalSpectrum z{lambda, {}};
  for (int l = 0; l <= truncation; ++l) {
    z.coeffs.emplace_back(std::exp(-t * l * (l + 2 * lambda) / 2) * (l + lambda) / lambda);
  }
  return z;
}

double weighted_binomial_sum(int m, double lambda) {
  CompensatedSum sum;
  for (int l = 1; l <= m; ++l) {
    sum.add((l + lambda) * specfun::binomial(l + 2 * lambda, l - 1));
  }
  return sum.value();
}

double weighted_binomial_closed_form(int m, double lambda) {
  if (m < 1) {
    return 0.0;
  }
  using specfun::log_gamma;
  return (2.0 * m + 2 * lambda + 1) * (lambda + 1) *
         std::exp(log_gamma(m + 2 * lambda + 2) - log_gamma(m) - log_gamma(2 * lambda + 4));
}

} // namespace sphmra::uncertainty
