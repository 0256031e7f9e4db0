#pragma once

#include <span>
#include <string>

#include "sphmra/harmonics.hpp"

namespace sphmra {

struct PdClassification {
  bool semidefinite = false;
  int strict_up_to_cardinality = 0;
  bool strictly_pd = false;
  std::string reason;
};

namespace posdef {

/// Coefficients with magnitude below this are treated as zero.
inline constexpr double zero_threshold = 1e-14;

/// Semidefinite iff every coefficient is >= -1e-14 (and real); cardinality is
/// the largest L with a_l > 1e-14 for all l < L. A finite expansion is never
/// strictly positive definite.
PdClassification classify(const ZonalSpectrum& spec);

/// Smallest eigenvalue of (G(x_i . x_k))_{i,k} for G given by `spec`.
double gramian_min_eigenvalue(const ZonalSpectrum& spec, std::span<const SphericalPoint> points);

} // namespace posdef
} // namespace sphmra
