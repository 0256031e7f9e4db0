#include "sphmra/posdef.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

namespace sphmra::posdef {

PdClassification classify(const ZonalSpectrum& spec) {
  PdClassification c;
  for (int l = 0; l <= spec.max_degree(); ++l) {
    if (std::abs(spec.coeffs[l].imag()) > zero_threshold) {
      c.reason = "coefficient " + std::to_string(l) + " is not real";
      return c;
    }
  }
  c.semidefinite = true;
  for (int l = 0; l <= spec.max_degree(); ++l) {
    if (spec.coeffs[l].real() < -zero_threshold) {
      c.semidefinite = false;
      c.reason = "coefficient " + std::to_string(l) + " is negative";
      break;
    }
  }
  int cardinality = 0;
  while (cardinality <= spec.max_degree() && spec.coeffs[cardinality].real() > zero_threshold) {
    ++cardinality;
  }
  c.strict_up_to_cardinality = c.semidefinite ? cardinality : 0;
  c.strictly_pd = false;
  if (c.semidefinite) {
    c.reason = "finite expansion";
  }
  return c;
}

double gramian_min_eigenvalue(const ZonalSpectrum& spec, std::span<const SphericalPoint> points) {
  if (points.empty()) {
    throw std::invalid_argument("gramian needs at least one point");
  }
  if (points.size() > 500) {
    throw std::invalid_argument("gramian is limited to 500 points");
  }
  const auto size = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index k = i; k < size; ++k) {
      const double v = specfun::zonal_eval(spec, dot(points[i], points[k])).real();
      a(i, k) = v;
      a(k, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gramian eigensolve did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

} // namespace sphmra::posdef
