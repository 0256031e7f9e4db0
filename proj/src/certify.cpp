#include "sphmra/certify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "sphmra/mra.hpp"
#include "sphmra/oracle.hpp"

namespace sphmra::certify {

double Entry::relative_deviation() const {
  const double scale = derived != 0.0 ? std::abs(derived) : 1.0;
  return std::abs(measured - derived) / scale;
}

bool Entry::passed() const { return relative_deviation() <= tolerance; }

double Entry::printed_ratio() const { return has_printed ? printed / measured : 1.0; }

bool Report::passed() const {
  for (const auto& e : entries) {
    if (!e.passed()) {
      return false;
    }
  }
  return true;
}

std::string Report::to_text() const {
  std::ostringstream out;
  char buf[512];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%-4s %-28s n=%d j=%d derived=%.12g measured=%.12g rel_dev=%.2e",
                  e.passed() ? "PASS" : "FAIL", e.name.c_str(), e.n, e.j, e.derived, e.measured,
                  e.relative_deviation());
    out << buf;
    if (e.has_printed) {
      std::snprintf(buf, sizeof buf, " printed=%.12g printed/measured=%.6g", e.printed,
                    e.printed_ratio());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

SphericalPoint random_point(const SphereGeometry& geometry, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> x(geometry.n() + 1);
  double norm = 0.0;
  for (double& v : x) {
    v = normal(rng);
    norm += v * v;
  }
  for (double& v : x) {
    v /= std::sqrt(norm);
  }
  return from_cartesian(x);
}

Spectrum random_spectrum(const SphereGeometry& geometry, int level,
                         const std::vector<HarmonicIndex>& indices, std::mt19937& rng) {
  std::normal_distribution<double> normal;
  Spectrum s(geometry, level);
  for (const auto& index : indices) {
    const double re = normal(rng);
    const double im = normal(rng);
    s.entries.emplace(index, complex{re, im});
  }
  return s;
}

// Point evaluation of a spectrum through the harmonics module only.
oracle::Function as_function(const Spectrum& s) {
  std::vector<HarmonicIndex> indices;
  std::vector<complex> coeffs;
  for (const auto& [index, value] : s.entries) {
    indices.push_back(index);
    coeffs.push_back(value);
  }
  auto basis = std::make_shared<HarmonicBasis>(s.geometry, indices);
  return [basis, coeffs](const SphericalPoint& x) {
    const auto y = basis->values(x);
    complex sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      sum += coeffs[i] * y[i];
    }
    return sum;
  };
}

GridSignal sample(const oracle::Function& f, const SphereGeometry& geometry, int level) {
  std::vector<complex> values;
  for (const auto& node : quadrature::grid_nodes(geometry, level)) {
    values.push_back(f(quadrature::node_point(node)));
  }
  return GridSignal(geometry, level, std::move(values));
}

Entry make(std::string name, const SphereGeometry& g, int j, double derived, double measured) {
  Entry e;
  e.name = std::move(name);
  e.n = g.n();
  e.j = j;
  e.derived = derived;
  e.measured = measured;
  return e;
}

Entry with_printed(Entry e, double printed) {
  e.printed = printed;
  e.has_printed = true;
  return e;
}

double oracle_norm_sq(const oracle::Function& f, const oracle::IntegrationSpec& spec) {
  return oracle::inner_product(f, f, spec).real();
}

// A point where |f| is comfortably away from zero.
SphericalPoint probe(const oracle::Function& f, const SphereGeometry& g, std::mt19937& rng) {
  SphericalPoint best = random_point(g, rng);
  double best_value = std::abs(f(best));
  for (int i = 0; i < 16; ++i) {
    const auto x = random_point(g, rng);
    const double v = std::abs(f(x));
    if (v > best_value) {
      best = x;
      best_value = v;
    }
  }
  return best;
}

} // namespace

Report certify_constants(const SphereGeometry& geometry, int j, unsigned seed) {
  std::mt19937 rng(seed);
  const oracle::IntegrationSpec spec(geometry);
  const auto c = mra::constants(geometry, j);
  const auto printed = mra::printed_constants(geometry, j);
  Report report;

  const auto v = random_spectrum(geometry, j, mra::scaling_indices(geometry, j), rng);
  const auto f = as_function(v);

  // analysis: oracle coefficient over the raw weighted sum, at the largest coefficient
  const auto samples = sample(f, geometry, j);
  const auto raw = mra::raw_analysis_sums(samples, mra::max_degree(j));
  HarmonicIndex pick = v.entries.begin()->first;
  for (const auto& [index, value] : v.entries) {
    if (std::abs(value) > std::abs(v.at(pick))) {
      pick = index;
    }
  }
  const complex exact = oracle::brute_fourier(f, pick, spec);
  report.entries.push_back(with_printed(
      make("analysis constant", geometry, j, c.analysis, std::abs(exact / raw.at(pick))),
      printed.analysis));

  const auto y = probe(f, geometry, rng);
  const auto raw_syn = mra::raw_interpolatory_sum(samples, false);
  report.entries.push_back(with_printed(
      make("V synthesis constant", geometry, j, c.v_synthesis, std::abs(f(y) / raw_syn(y))),
      printed.v_synthesis));

  const double norm_v = oracle_norm_sq(f, spec);
  report.entries.push_back(with_printed(
      make("V frame constant", geometry, j, c.v_frame, norm_v / mra::raw_frame_sum(v, j, false)),
      printed.v_frame));

  const auto w = random_spectrum(geometry, j + 1, mra::wavelet_indices(geometry, j), rng);
  const auto g = as_function(w);
  const auto fine = sample(g, geometry, j + 1);
  const auto z = probe(g, geometry, rng);
  const auto raw_wsyn = mra::raw_interpolatory_sum(fine, true);
  report.entries.push_back(with_printed(
      make("W synthesis constant", geometry, j, c.w_synthesis, std::abs(g(z) / raw_wsyn(z))),
      printed.w_synthesis));

  const double norm_w = oracle_norm_sq(g, spec);
  report.entries.push_back(with_printed(
      make("W frame constant", geometry, j, c.w_frame, norm_w / mra::raw_frame_sum(w, j, true)),
      printed.w_frame));

  // The frame sums take <f, phi_j(. x)> = 2^(-nj/2) conj(f(x)); check it here.
  const auto x1 = probe(f, geometry, rng);
  const auto phi = [&](const SphericalPoint& x) {
    return complex{mra::scaling_kernel(geometry, j, dot(x, x1))};
  };
  const complex rep = oracle::inner_product(phi, f, spec);
  report.entries.push_back(make("scaling reproducing factor", geometry, j,
                                std::exp2(-0.5 * geometry.n() * j), std::abs(rep / f(x1))));

  const auto z1 = probe(g, geometry, rng);
  const auto psi = [&](const SphericalPoint& x) {
    return complex{mra::wavelet_kernel(geometry, j, dot(x, z1))};
  };
  const complex wrep = oracle::inner_product(psi, g, spec);
  report.entries.push_back(make("wavelet reproducing factor", geometry, j,
                                std::exp2(-0.5 * geometry.n() * j), std::abs(wrep / g(z1))));
  return report;
}

Report certify_closed_forms(const SphereGeometry& geometry, int j, unsigned seed) {
  std::mt19937 rng(seed);
  const oracle::IntegrationSpec spec(geometry);
  Report report;
  const auto x0 = random_point(geometry, rng);

  const oracle::Function phi = [&](const SphericalPoint& x) {
    return complex{mra::scaling_kernel(geometry, j, dot(x, x0))};
  };
  const oracle::Function psi = [&](const SphericalPoint& x) {
    return complex{mra::wavelet_kernel(geometry, j, dot(x, x0))};
  };
  const oracle::Function phi_fine = [&](const SphericalPoint& x) {
    return complex{mra::scaling_kernel(geometry, j + 1, dot(x, x0))};
  };

  const double phi_norm = oracle_norm_sq(phi, spec);
  const double psi_norm = oracle_norm_sq(psi, spec);
  report.entries.push_back(
      make("scaling norm squared", geometry, j, mra::scaling_norm_sq(geometry, j), phi_norm));
  report.entries.push_back(with_printed(
      make("wavelet norm squared", geometry, j, mra::wavelet_norm_sq(geometry, j), psi_norm),
      mra::printed_wavelet_norm_sq(geometry, j)));
  report.entries.push_back(make("scaling integral", geometry, j,
                                mra::scaling_integral(geometry, j),
                                oracle::dense_integral(phi, spec).real()));
  report.entries.push_back(make("wavelet integral", geometry, j,
                                mra::wavelet_integral(geometry, j),
                                oracle::dense_integral(psi, spec).real()));

  // Two-scale relations on the top coefficient of each band.
  std::vector<HarmonicIndex> top = mra::scaling_indices(geometry, j);
  std::vector<HarmonicIndex> band = mra::wavelet_indices(geometry, j);
  const auto& a = top.back();
  const auto& b = band.back();
  const double phi_ratio = std::abs(oracle::brute_fourier(phi, a, spec) /
                                    oracle::brute_fourier(phi_fine, a, spec));
  const double psi_ratio = std::abs(oracle::brute_fourier(psi, b, spec) /
                                    oracle::brute_fourier(phi_fine, b, spec));
  report.entries.push_back(with_printed(
      make("scaling two-scale factor", geometry, j, std::exp2(0.5 * geometry.n()), phi_ratio),
      std::exp2(0.5 * geometry.n())));
  report.entries.push_back(
      with_printed(make("wavelet two-scale factor", geometry, j, std::exp2(0.5 * geometry.n()),
                        psi_ratio),
                   1.0));
  return report;
}

Report certify_all(const SphereGeometry& geometry, int max_j) {
  Report all;
  for (int j = 1; j <= max_j; ++j) {
    for (auto& e : certify_constants(geometry, j).entries) {
      all.entries.push_back(std::move(e));
    }
    for (auto& e : certify_closed_forms(geometry, j).entries) {
      all.entries.push_back(std::move(e));
    }
  }
  return all;
}

} // namespace sphmra::certify
