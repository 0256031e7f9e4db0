#include "sphmra/mra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sphmra {

complex Spectrum::at(const HarmonicIndex& index) const {
  const auto it = entries.find(index);
  return it == entries.end() ? complex{} : it->second;
}

int Spectrum::max_degree() const {
  int d = -1;
  for (const auto& [index, value] : entries) {
    d = std::max(d, index.l);
  }
  return d;
}

GridSignal::GridSignal(SphereGeometry g, int j)
    : geometry(g), level(j),
      values(static_cast<std::size_t>(quadrature::grid_size(g, j)), complex{}) {}

GridSignal::GridSignal(SphereGeometry g, int j, std::vector<complex> v)
    : geometry(g), level(j), values(std::move(v)) {
  const auto expected = quadrature::grid_size(g, j);
  if (static_cast<std::int64_t>(values.size()) != expected) {
    throw std::invalid_argument("GridSignal on N_" + std::to_string(j) + " needs " +
                                std::to_string(expected) + " samples, got " +
                                std::to_string(values.size()));
  }
}

namespace mra {

namespace {

double pi() { return std::numbers::pi; }

void check_level(int j) {
  if (j < 1) {
    throw std::invalid_argument("level j must be >= 1");
  }
  if (j > 30) {
    throw std::invalid_argument("level j is out of range");
  }
}

// Everything a separable transform on N_j needs for a fixed index list: the
// latitudinal factor of every index on every polar node, and the quadrature
// weight of every latitude multi-index.
class GridPlan {
public:
  GridPlan(const SphereGeometry& geometry, int j, std::vector<HarmonicIndex> indices)
      : geometry_(geometry), level_(j), indices_(std::move(indices)) {
    const int n = geometry.n();
    side_ = (1 << j) + 1;
    azimuths_ = 1 << (j + 1);
    max_freq_ = 0;
    for (const auto& index : indices_) {
      max_freq_ = std::max(max_freq_, index.chain.back());
      norm_.push_back(normalization_constant(geometry, index));
    }
    weights_ = quadrature::latitude_weights(geometry, j);

    factors_.resize(n - 1);
    if (!indices_.empty()) {
      HarmonicBasis basis(geometry, indices_);
      for (int nu = 1; nu <= n - 1; ++nu) {
        auto& axis = factors_[nu - 1];
        axis.resize(side_);
        for (int s = 0; s < side_; ++s) {
          const auto table = basis.axis_table(nu, s * pi() / (1 << j));
          auto& row = axis[s];
          row.resize(indices_.size());
          for (std::size_t i = 0; i < indices_.size(); ++i) {
            const auto& index = indices_[i];
            const int prev = nu == 1 ? index.l : index.chain[nu - 2];
            const int k = index.chain[nu - 1];
            row[i] = table[k][prev - k];
          }
        }
      }
    }

    roots_.resize(azimuths_);
    for (int r = 0; r < azimuths_; ++r) {
      const double angle = 2.0 * pi() * r / azimuths_;
      roots_[r] = {std::cos(angle), std::sin(angle)};
    }
  }

  std::size_t latitude_count() const { return weights_.size(); }
  int azimuths() const { return azimuths_; }
  int max_freq() const { return max_freq_; }
  const std::vector<HarmonicIndex>& indices() const { return indices_; }
  double weight(std::size_t p) const { return weights_[p]; }

  // exp(i m t pi / 2^j)
  complex phase(int m, int t) const {
    const long r = ((static_cast<long>(m) * t) % azimuths_ + azimuths_) % azimuths_;
    return roots_[r];
  }

  // Latitudinal factors of every index at latitude multi-index `s`.
  void latitudinal(const std::vector<int>& s, std::vector<double>& out) const {
    out.assign(norm_.begin(), norm_.end());
    for (std::size_t nu = 0; nu < s.size(); ++nu) {
      const auto& row = factors_[nu][s[nu]];
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= row[i];
      }
    }
  }

  // Advances the latitude multi-index; s_1 slowest.
  bool next(std::vector<int>& s) const {
    int axis = static_cast<int>(s.size()) - 1;
    while (axis >= 0 && ++s[axis] == side_) {
      s[axis] = 0;
      --axis;
    }
    return axis >= 0;
  }

  std::vector<int> first() const { return std::vector<int>(geometry_.n() - 1, 0); }

private:
  SphereGeometry geometry_;
  int level_;
  std::vector<HarmonicIndex> indices_;
  std::vector<double> norm_;
  std::vector<double> weights_;
  std::vector<std::vector<std::vector<double>>> factors_;  // [axis][s][index]
  std::vector<complex> roots_;
  int side_ = 0;
  int azimuths_ = 0;
  int max_freq_ = 0;
};

double zonal_band(const SphereGeometry& geometry, int j, int lo, int hi, double t) {
  const double lambda = geometry.lambda();
  const auto c = specfun::gegenbauer_all(lambda, hi, t);
  double sum = 0.0;
  for (int l = lo; l <= hi; ++l) {
    sum += (l + lambda) / lambda * c[l];
  }
  return std::exp2(-0.5 * geometry.n() * j) * sum;
}

ZonalSpectrum zonal_band_spectrum(const SphereGeometry& geometry, int j, int lo, int hi) {
  const double lambda = geometry.lambda();
  ZonalSpectrum z{lambda, std::vector<complex>(static_cast<std::size_t>(hi) + 1, complex{})};
  for (int l = lo; l <= hi; ++l) {
    z.coeffs[l] = std::exp2(-0.5 * geometry.n() * j) * (l + lambda) / lambda;
  }
  return z;
}

Spectrum kernel_spectrum(const SphereGeometry& geometry, int j, int level,
                         const std::vector<HarmonicIndex>& indices, const SphericalPoint& x0) {
  Spectrum out(geometry, level);
  const HarmonicBasis basis(geometry, indices);
  const auto y = basis.values(x0);
  const double scale = std::exp2(-0.5 * geometry.n() * j);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.entries.emplace(indices[i], scale * std::conj(y[i]));
  }
  return out;
}

// log of dim Pi_m in floating point.
double log_dim_pi(const SphereGeometry& geometry, int m) {
  const int n = geometry.n();
  return std::log(n + 2.0 * m) + specfun::log_gamma(n + m) - specfun::log_gamma(n + 1.0) -
         specfun::log_gamma(m + 1.0);
}

struct Node {
  SphericalPoint point;
  double weight;
};

std::vector<Node> weighted_nodes(const SphereGeometry& geometry, int j) {
  std::vector<Node> out;
  for (const auto& node : quadrature::grid_nodes(geometry, j)) {
    out.push_back({quadrature::node_point(node), quadrature::level_weight(geometry, j, node)});
  }
  return out;
}

} // namespace

int max_degree(int j) {
  check_level(j);
  return (1 << (j - 1)) - 1;
}

std::vector<HarmonicIndex> scaling_indices(const SphereGeometry& geometry, int j) {
  return enumerate_indices(geometry, max_degree(j));
}

std::vector<HarmonicIndex> wavelet_indices(const SphereGeometry& geometry, int j) {
  auto all = enumerate_indices(geometry, max_degree(j + 1));
  const int lo = max_degree(j) + 1;
  std::erase_if(all, [lo](const HarmonicIndex& index) { return index.l < lo; });
  return all;
}

ConstantSet constants(const SphereGeometry& geometry, int j) {
  check_level(j);
  const double n = geometry.n();
  const double s = geometry.sigma_n();
  return {
      pi() / (s * std::exp2(j)),
      std::exp2(0.5 * j * (n - 2)) * pi() / s,
      std::exp2(j * (n - 1)) * pi() / s,
      std::exp2(0.5 * ((n - 2) * j - 2)) * pi() / s,
      std::exp2((n - 1) * j - 1) * pi() / s,
  };
}

ConstantSet printed_constants(const SphereGeometry& geometry, int j) {
  check_level(j);
  const double n = geometry.n();
  const double w_syn = std::exp2(0.5 * ((n - 2) * j - 2)) * pi();
  return {
      pi() / std::exp2(j),
      std::exp2(0.5 * j * (n - 2)) * pi(),
      std::exp2(n * j - 1) * pi(),
      w_syn,
      w_syn,
  };
}

Spectrum raw_analysis_sums(const GridSignal& signal, int degree) {
  const auto& geometry = signal.geometry;
  const int j = signal.level;
  check_level(j);
  if (degree < 0 || 2 * degree > (1 << j)) {
    throw std::invalid_argument("analysis on N_" + std::to_string(j) +
                                " is exact only up to degree " + std::to_string(1 << (j - 1)));
  }
  if (static_cast<std::int64_t>(signal.values.size()) != quadrature::grid_size(geometry, j)) {
    throw std::invalid_argument("signal size does not match its grid");
  }
  const GridPlan plan(geometry, j, enumerate_indices(geometry, degree));
  const auto& indices = plan.indices();
  const int L = plan.max_freq();
  const int T = plan.azimuths();

  std::vector<complex> acc(indices.size(), complex{});
  std::vector<complex> freq(2 * L + 1);
  std::vector<double> lat;
  auto s = plan.first();
  std::size_t p = 0;
  do {
    const complex* row = signal.values.data() + p * T;
    for (int m = -L; m <= L; ++m) {
      complex sum = 0.0;
      for (int t = 0; t < T; ++t) {
        sum += row[t] * std::conj(plan.phase(m, t));
      }
      freq[m + L] = sum;
    }
    plan.latitudinal(s, lat);
    const double w = plan.weight(p);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      acc[i] += w * lat[i] * freq[indices[i].azimuthal() + L];
    }
    ++p;
  } while (plan.next(s));

  Spectrum out(geometry, j);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.entries.emplace_hint(out.entries.end(), indices[i], acc[i]);
  }
  return out;
}

Spectrum analyze(const GridSignal& signal, int degree) {
  auto out = raw_analysis_sums(signal, degree);
  const double c = constants(signal.geometry, signal.level).analysis;
  for (auto& [index, value] : out.entries) {
    value *= c;
  }
  return out;
}

Spectrum analyze(const GridSignal& signal) { return analyze(signal, max_degree(signal.level)); }

std::vector<complex> synthesize(const Spectrum& spectrum, std::span<const SphericalPoint> points) {
  std::vector<HarmonicIndex> indices;
  std::vector<complex> coeffs;
  for (const auto& [index, value] : spectrum.entries) {
    indices.push_back(index);
    coeffs.push_back(value);
  }
  const HarmonicBasis basis(spectrum.geometry, indices);
  std::vector<complex> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    const auto y = basis.values(x);
    complex sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      sum += coeffs[i] * y[i];
    }
    out.push_back(sum);
  }
  return out;
}

complex synthesize_at(const Spectrum& spectrum, const SphericalPoint& point) {
  return synthesize(spectrum, std::span(&point, 1)).front();
}

GridSignal synthesize_on_grid(const Spectrum& spectrum, int j) {
  const auto& geometry = spectrum.geometry;
  check_level(j);
  GridSignal out(geometry, j);
  std::vector<HarmonicIndex> indices;
  std::vector<complex> coeffs;
  for (const auto& [index, value] : spectrum.entries) {
    validate_index(geometry, index);
    indices.push_back(index);
    coeffs.push_back(value);
  }
  if (indices.empty()) {
    return out;
  }
  const GridPlan plan(geometry, j, indices);
  const int L = plan.max_freq();
  const int T = plan.azimuths();

  std::vector<complex> freq(2 * L + 1);
  std::vector<double> lat;
  auto s = plan.first();
  std::size_t p = 0;
  do {
    plan.latitudinal(s, lat);
    std::fill(freq.begin(), freq.end(), complex{});
    for (std::size_t i = 0; i < indices.size(); ++i) {
      freq[indices[i].azimuthal() + L] += coeffs[i] * lat[i];
    }
    complex* row = out.values.data() + p * T;
    for (int t = 0; t < T; ++t) {
      complex sum = 0.0;
      for (int m = -L; m <= L; ++m) {
        sum += freq[m + L] * plan.phase(m, t);
      }
      row[t] = sum;
    }
    ++p;
  } while (plan.next(s));
  return out;
}

Spectrum band(const Spectrum& spectrum, int lo, int hi) {
  Spectrum out(spectrum.geometry, spectrum.level);
  for (const auto& [index, value] : spectrum.entries) {
    if (index.l >= lo && index.l <= hi) {
      out.entries.emplace_hint(out.entries.end(), index, value);
    }
  }
  return out;
}

double scaling_kernel(const SphereGeometry& geometry, int j, double t) {
  return zonal_band(geometry, j, 0, max_degree(j), t);
}

double wavelet_kernel(const SphereGeometry& geometry, int j, double t) {
  return zonal_band(geometry, j, max_degree(j) + 1, max_degree(j + 1), t);
}

ZonalSpectrum scaling_zonal(const SphereGeometry& geometry, int j) {
  return zonal_band_spectrum(geometry, j, 0, max_degree(j));
}

ZonalSpectrum wavelet_zonal(const SphereGeometry& geometry, int j) {
  return zonal_band_spectrum(geometry, j, max_degree(j) + 1, max_degree(j + 1));
}

Spectrum scaling_spectrum(const SphereGeometry& geometry, int j, const SphericalPoint& x0) {
  return kernel_spectrum(geometry, j, j, scaling_indices(geometry, j), x0);
}

Spectrum wavelet_spectrum(const SphereGeometry& geometry, int j, const SphericalPoint& x0) {
  return kernel_spectrum(geometry, j, j + 1, wavelet_indices(geometry, j), x0);
}

double scaling_norm_sq(const SphereGeometry& geometry, int j) {
  return std::exp(log_dim_pi(geometry, max_degree(j)) - geometry.n() * j * std::numbers::ln2);
}

double wavelet_norm_sq(const SphereGeometry& geometry, int j) {
  const double scale = std::exp2(-static_cast<double>(geometry.n()) * j);
  const double hi = std::exp(log_dim_pi(geometry, max_degree(j + 1)));
  const double lo = std::exp(log_dim_pi(geometry, max_degree(j)));
  return scale * (hi - lo);
}

double printed_wavelet_norm_sq(const SphereGeometry& geometry, int j) {
  const double scale = std::exp2(-static_cast<double>(geometry.n()) * j);
  const double hi = std::exp(log_dim_pi(geometry, max_degree(j + 1)));
  const double lo = std::exp(log_dim_pi(geometry, max_degree(j)));
  return scale * (std::exp2(geometry.n()) * hi - lo);
}

double scaling_integral(const SphereGeometry& geometry, int j) {
  check_level(j);
  const double n = geometry.n();
  const double lambda = geometry.lambda();
  const double log_value = (3.0 - n * (1.0 + 0.5 * j)) * std::numbers::ln2 +
                           (0.5 * n + 1.0) * std::log(pi()) + specfun::log_gamma(2 * lambda) -
                           specfun::log_gamma(lambda) - specfun::log_gamma(lambda + 0.5) -
                           specfun::log_gamma(lambda + 1.0);
  return std::exp(log_value);
}

double wavelet_integral(const SphereGeometry& /*geometry*/, int j) {
  check_level(j);
  return 0.0;
}

PointFunction raw_interpolatory_sum(const GridSignal& samples, bool wavelet) {
  const auto geometry = samples.geometry;
  const int level = samples.level;
  const int j = wavelet ? level - 1 : level;
  check_level(j);
  auto nodes = weighted_nodes(geometry, level);
  if (nodes.size() != samples.values.size()) {
    throw std::invalid_argument("sample count does not match the grid");
  }
  struct Term {
    std::vector<double> x;
    complex weighted;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    terms.push_back({to_cartesian(nodes[i].point), nodes[i].weight * samples.values[i]});
  }
  const ZonalSpectrum kernel = wavelet ? wavelet_zonal(geometry, j) : scaling_zonal(geometry, j);
  return [terms = std::move(terms), kernel](const SphericalPoint& y) {
    const auto yc = to_cartesian(y);
    complex sum = 0.0;
    for (const auto& term : terms) {
      double t = 0.0;
      for (std::size_t d = 0; d < yc.size(); ++d) {
        t += yc[d] * term.x[d];
      }
      sum += term.weighted * specfun::zonal_eval(kernel, std::clamp(t, -1.0, 1.0));
    }
    return sum;
  };
}

PointFunction interpolatory_synthesis(const GridSignal& samples) {
  const double c = constants(samples.geometry, samples.level).v_synthesis;
  auto raw = raw_interpolatory_sum(samples, false);
  return [raw = std::move(raw), c](const SphericalPoint& y) { return c * raw(y); };
}

PointFunction wavelet_interpolatory_synthesis(const GridSignal& samples) {
  const double c = constants(samples.geometry, samples.level - 1).w_synthesis;
  auto raw = raw_interpolatory_sum(samples, true);
  return [raw = std::move(raw), c](const SphericalPoint& y) { return c * raw(y); };
}

double raw_frame_sum(const Spectrum& f, int j, bool wavelet) {
  check_level(j);
  const int level = wavelet ? j + 1 : j;
  // <f, phi_j(. x)> = 2^(-nj/2) conj(f(x)) by the reproducing property
  const auto values = synthesize_on_grid(f, level);
  const auto weights = quadrature::latitude_weights(f.geometry, level);
  const std::size_t T = std::size_t{1} << (level + 1);
  const double scale = std::exp2(-static_cast<double>(f.geometry.n()) * j);
  double sum = 0.0;
  for (std::size_t i = 0; i < values.values.size(); ++i) {
    sum += weights[i / T] * scale * std::norm(values.values[i]);
  }
  return sum;
}

double frame_functional(const Spectrum& f, int j) {
  return constants(f.geometry, j).v_frame * raw_frame_sum(f, j, false);
}

double wavelet_frame_functional(const Spectrum& f, int j) {
  return constants(f.geometry, j).w_frame * raw_frame_sum(f, j, true);
}

double norm_sq(const Spectrum& f) {
  double sum = 0.0;
  for (const auto& [index, value] : f.entries) {
    sum += std::norm(value);
  }
  return sum;
}

double localization_bound(const SphereGeometry& geometry, int j) {
  return std::exp(-0.5 * log_dim_pi(geometry, max_degree(j)));
}

bool localization_check(const SphereGeometry& geometry, int j, const SphericalPoint& x0,
                        std::span<const Spectrum> trials) {
  const double bound = localization_bound(geometry, j);
  for (const auto& trial : trials) {
    if (trial.max_degree() > max_degree(j)) {
      throw std::invalid_argument("localization trial is not in V_j");
    }
    const double value = std::abs(synthesize_at(trial, x0));
    if (value < 1e-12) {
      continue;
    }
    if (std::sqrt(norm_sq(trial)) / value < bound - 1e-10) {
      return false;
    }
  }
  return true;
}

} // namespace mra
} // namespace sphmra
