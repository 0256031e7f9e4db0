#pragma once

#include <functional>
#include <map>
#include <vector>

#include "sphmra/harmonics.hpp"
#include "sphmra/quadrature.hpp"

namespace sphmra {

/// Fourier coefficients a_l^k keyed by index; absent entries are zero.
struct Spectrum {
  SphereGeometry geometry;
  int level = 1;
  std::map<HarmonicIndex, complex> entries;

  explicit Spectrum(SphereGeometry g, int j = 1) : geometry(g), level(j) {}

  complex at(const HarmonicIndex& index) const;
  int max_degree() const;
};

/// Samples on N_j in quadrature::grid_nodes order.
struct GridSignal {
  SphereGeometry geometry;
  int level = 1;
  std::vector<complex> values;

  GridSignal(SphereGeometry g, int j);
  GridSignal(SphereGeometry g, int j, std::vector<complex> v);
};

namespace mra {

/// Highest degree in V_j: 2^(j-1) - 1.
int max_degree(int j);

/// Indices of I_j and of I_{j+1} \ I_j.
std::vector<HarmonicIndex> scaling_indices(const SphereGeometry& geometry, int j);
std::vector<HarmonicIndex> wavelet_indices(const SphereGeometry& geometry, int j);

/// Normalization constants of the discrete transforms at level j, with the
/// sigma_n factor of the normalized inner product included.
struct ConstantSet {
  double analysis;       // pi / (sigma_n 2^j)
  double v_synthesis;    // sqrt(2)^(j(n-2)) pi / sigma_n
  double v_frame;        // 2^(j(n-1)) pi / sigma_n
  double w_synthesis;    // sqrt(2)^((n-2)j-2) pi / sigma_n
  double w_frame;        // 2^((n-1)j-1) pi / sigma_n
};
ConstantSet constants(const SphereGeometry& geometry, int j);

/// The same constants as they appear in the original printed statements
/// (no sigma_n factor; the frame constants as printed).
ConstantSet printed_constants(const SphereGeometry& geometry, int j);

/// Coefficients over I_j from samples on N_j. Exact when the samples come from
/// a function in V_j. `max_degree` overrides the band (must satisfy
/// 2 max_degree <= 2^j).
Spectrum analyze(const GridSignal& signal);
Spectrum analyze(const GridSignal& signal, int max_degree);

/// The weighted raw sums sum_{s,t} (prod chi) f(x) conj(Y(x)) without the
/// analysis constant; used for constant certification.
Spectrum raw_analysis_sums(const GridSignal& signal, int max_degree);

/// f(x) = sum a_l^k Y_l^k(x).
std::vector<complex> synthesize(const Spectrum& spectrum, std::span<const SphericalPoint> points);
complex synthesize_at(const Spectrum& spectrum, const SphericalPoint& point);

/// Samples of the spectrum on N_j.
GridSignal synthesize_on_grid(const Spectrum& spectrum, int j);

/// Keep only entries with lo <= l <= hi.
Spectrum band(const Spectrum& spectrum, int lo, int hi);

/// phi_j(t) = 2^(-nj/2) sum_{l < 2^(j-1)} (l+lambda)/lambda C_l^lambda(t).
double scaling_kernel(const SphereGeometry& geometry, int j, double t);

/// psi_j(t) = 2^(-nj/2) sum_{2^(j-1) <= l < 2^j} (l+lambda)/lambda C_l^lambda(t).
double wavelet_kernel(const SphereGeometry& geometry, int j, double t);

/// Gegenbauer coefficients of phi_j and psi_j.
ZonalSpectrum scaling_zonal(const SphereGeometry& geometry, int j);
ZonalSpectrum wavelet_zonal(const SphereGeometry& geometry, int j);

/// Fourier coefficients of phi_j(. x0) over I_j and psi_j(. x0) over
/// I_{j+1} \ I_j: 2^(-nj/2) conj(Y_l^k(x0)).
Spectrum scaling_spectrum(const SphereGeometry& geometry, int j, const SphericalPoint& x0);
Spectrum wavelet_spectrum(const SphereGeometry& geometry, int j, const SphericalPoint& x0);

/// ||phi_j(. x)||^2 = (n+2^j-2)(n+2^(j-1)-2)! / (2^(nj) n! (2^(j-1)-1)!).
double scaling_norm_sq(const SphereGeometry& geometry, int j);

/// ||psi_j(. x)||^2 = 2^(-nj) (dim Pi_{2^j-1} - dim Pi_{2^(j-1)-1}).
double wavelet_norm_sq(const SphereGeometry& geometry, int j);

/// Right-hand side of the printed wavelet-norm formula, which carries an extra
/// 2^n on the first dimension term; kept for deviation reports.
double printed_wavelet_norm_sq(const SphereGeometry& geometry, int j);

/// int_{S^n} phi_j(x . y) dsigma(x)
///   = 2^(3-n(1+j/2)) pi^(n/2+1) Gamma(2 lambda) / (Gamma(lambda) Gamma(lambda+1/2) Gamma(lambda+1)).
double scaling_integral(const SphereGeometry& geometry, int j);

/// int_{S^n} psi_j(x . y) dsigma(x) = 0 (no degree-0 component).
double wavelet_integral(const SphereGeometry& geometry, int j);

using PointFunction = std::function<complex(const SphericalPoint&)>;

/// f = C sum_{N_j} (prod chi) f(x_{s,t}) phi_j(. x_{s,t}) with C = v_synthesis.
PointFunction interpolatory_synthesis(const GridSignal& samples);

/// f = C sum_{N_{j+1}} (prod chi) f(x_{s,t}) psi_j(. x_{s,t}) for f in W_j,
/// with C = w_synthesis(j); `samples` live on N_{j+1}.
PointFunction wavelet_interpolatory_synthesis(const GridSignal& samples);

/// Raw synthesis sum without the constant (for certification).
PointFunction raw_interpolatory_sum(const GridSignal& samples, bool wavelet);

/// C sum (prod chi) |<f, phi_j(. x_{s,t})>|^2 over N_j for f in V_j
/// (equals ||f||^2); inner products from the coefficients of f.
double frame_functional(const Spectrum& f, int j);

/// The same over N_{j+1} with psi_j for f in W_j.
double wavelet_frame_functional(const Spectrum& f, int j);

/// Sum without the constant.
double raw_frame_sum(const Spectrum& f, int j, bool wavelet);

/// ||f||^2 = sum |a_l^k|^2.
double norm_sq(const Spectrum& f);

/// min { ||f|| : f in V_j, f(x0) = 1 } = ||phi_j(. x0)|| / phi_j(1).
double localization_bound(const SphereGeometry& geometry, int j);

/// True when every trial, rescaled to f(x0) = 1, has norm at least the
/// localization bound (minus 1e-10). Trials with |f(x0)| < 1e-12 are skipped.
bool localization_check(const SphereGeometry& geometry, int j, const SphericalPoint& x0,
                        std::span<const Spectrum> trials);

} // namespace mra
} // namespace sphmra
