#pragma once

#include <stdexcept>
#include <string>

namespace sphmra {

// Domain violations (|t| > 1, invalid indices, bad parameters) are reported
// with std::domain_error / std::invalid_argument; the types below cover the
// remaining failure classes.

/// A computation would exceed a configured resource cap (e.g. grid size).
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input was not of the form the operation requires (e.g. a function that
/// is not a polynomial of the stated degree).
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The first moment of |f|^2 vanishes, so the space variance is undefined.
class degenerate_moment_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A truncated series does not meet its tail bound.
class truncation_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace sphmra
