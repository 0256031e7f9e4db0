#pragma once

#include <string>
#include <vector>

#include "sphmra/harmonics.hpp"

namespace sphmra::certify {

/// One certified quantity: the derived closed form, the independently measured
/// value, and (when it differs) the value as originally printed.
struct Entry {
  std::string name;
  int n = 0;
  int j = 0;
  double derived = 0.0;
  double measured = 0.0;
  double printed = 0.0;
  bool has_printed = false;
  double tolerance = 1e-8;

  double relative_deviation() const;
  bool passed() const;
  /// printed / measured, or 1 when nothing was printed separately.
  double printed_ratio() const;
};

struct Report {
  std::vector<Entry> entries;

  bool passed() const;
  std::string to_text() const;
};

/// Measures the five transform constants (analysis, V_j/W_j synthesis, V_j/W_j
/// frame) at level j from raw weighted sums and oracle integrals, and compares
/// them to the sigma_n-corrected closed forms.
Report certify_constants(const SphereGeometry& geometry, int j, unsigned seed = 7);

/// Closed-form norms and integrals of phi_j and psi_j against oracle integrals,
/// plus the two-scale relation of the wavelet coefficients.
Report certify_closed_forms(const SphereGeometry& geometry, int j, unsigned seed = 11);

/// Both suites for j = 1..max_j.
Report certify_all(const SphereGeometry& geometry, int max_j);

} // namespace sphmra::certify
