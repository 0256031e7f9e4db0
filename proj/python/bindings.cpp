#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphmra/certify.hpp"
#include "sphmra/errors.hpp"
#include "sphmra/posdef.hpp"
#include "sphmra/quadrature.hpp"
#include "sphmra/transform.hpp"
#include "sphmra/uncertainty.hpp"

namespace py = pybind11;
using namespace sphmra;

namespace {

// Spectra cross the boundary as {(l, (k_1, ..., k_{n-1}), sign): coefficient}.
using Key = std::tuple<int, std::vector<int>, int>;
using SpectrumDict = std::map<Key, complex>;

py::dict to_dict(const Spectrum& s) {
  py::dict out;
  for (const auto& [index, value] : s.entries) {
    out[py::make_tuple(index.l, py::tuple(py::cast(index.chain)), index.sign)] = value;
  }
  return out;
}

Spectrum from_dict(int n, int level, const SpectrumDict& d) {
  const SphereGeometry g(n);
  Spectrum s(g, level);
  for (const auto& [key, value] : d) {
    HarmonicIndex index{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    validate_index(g, index);
    s.entries.emplace(std::move(index), value);
  }
  return s;
}

py::dict report_dict(const UncertaintyReport& r) {
  py::dict d;
  d["var_space"] = r.var_space;
  d["var_momentum"] = r.var_momentum;
  d["product"] = r.product;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polynomial wavelet multiresolution analysis on n-spheres";

  py::register_exception<resource_error>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<degenerate_moment_error>(m, "DegenerateMomentError", PyExc_ValueError);
  py::register_exception<truncation_error>(m, "TruncationError", PyExc_ValueError);

  m.def("gegenbauer",
        [](double lambda, int l, double t) { return specfun::gegenbauer({lambda, l}, t); },
        py::arg("lam"), py::arg("l"), py::arg("t"));
  m.def("gegenbauer_at_one",
        [](double lambda, int l) { return specfun::gegenbauer_at_one({lambda, l}); },
        py::arg("lam"), py::arg("l"));
  m.def("gegenbauer_norm_1d",
        [](double lambda, int l) { return specfun::gegenbauer_norm_1d({lambda, l}); },
        py::arg("lam"), py::arg("l"));

  m.def("harmonic_count", [](int n, int l) { return harmonic_count(SphereGeometry(n), l); },
        py::arg("n"), py::arg("l"));
  m.def("dim_pi", [](int n, int mdeg) { return dim_pi(SphereGeometry(n), mdeg); }, py::arg("n"),
        py::arg("m"));

  m.def("quadrature_weights", [](int M, int alpha) { return quadrature::make_rule(M, alpha).weights; },
        py::arg("M"), py::arg("alpha"));
  m.def("single_frequency_integral", &quadrature::single_frequency_integral, py::arg("mu"),
        py::arg("alpha"));
  m.def("grid_size", [](int n, int j) { return quadrature::grid_size(SphereGeometry(n), j); },
        py::arg("n"), py::arg("j"));

  m.def("analyze",
        [](int n, int j, std::vector<complex> values) {
          return to_dict(mra::analyze(GridSignal(SphereGeometry(n), j, std::move(values))));
        },
        py::arg("n"), py::arg("j"), py::arg("values"),
        "Coefficients over I_j from samples on N_j (grid order: s_1 slowest, t fastest).");
  m.def("synthesize_on_grid",
        [](int n, const SpectrumDict& spectrum, int j) {
          return mra::synthesize_on_grid(from_dict(n, j, spectrum), j).values;
        },
        py::arg("n"), py::arg("spectrum"), py::arg("j"));

  m.def("constants",
        [](int n, int j) {
          const auto c = mra::constants(SphereGeometry(n), j);
          py::dict d;
          d["analysis"] = c.analysis;
          d["v_synthesis"] = c.v_synthesis;
          d["v_frame"] = c.v_frame;
          d["w_synthesis"] = c.w_synthesis;
          d["w_frame"] = c.w_frame;
          return d;
        },
        py::arg("n"), py::arg("j"));
  m.def("scaling_kernel",
        [](int n, int j, double t) { return mra::scaling_kernel(SphereGeometry(n), j, t); },
        py::arg("n"), py::arg("j"), py::arg("t"));
  m.def("wavelet_kernel",
        [](int n, int j, double t) { return mra::wavelet_kernel(SphereGeometry(n), j, t); },
        py::arg("n"), py::arg("j"), py::arg("t"));
  m.def("scaling_norm_sq", [](int n, int j) { return mra::scaling_norm_sq(SphereGeometry(n), j); },
        py::arg("n"), py::arg("j"));
  m.def("wavelet_norm_sq", [](int n, int j) { return mra::wavelet_norm_sq(SphereGeometry(n), j); },
        py::arg("n"), py::arg("j"));
  m.def("scaling_integral",
        [](int n, int j) { return mra::scaling_integral(SphereGeometry(n), j); }, py::arg("n"),
        py::arg("j"));

  m.def("pyramid_decompose",
        [](int n, int j, std::vector<complex> values, int levels) {
          const GridSignal v(SphereGeometry(n), j, std::move(values));
          const auto p = levels > 0 ? transform::pyramid_decompose(v, levels)
                                    : transform::pyramid_decompose(v);
          std::vector<std::vector<complex>> details;
          for (const auto& d : p.details) {
            details.push_back(d.values);
          }
          return py::make_tuple(p.base.level, p.base.values, details);
        },
        py::arg("n"), py::arg("j"), py::arg("values"), py::arg("levels") = 0,
        "Returns (base_level, base_values, [detail values, one per stage]).");
  m.def("pyramid_reconstruct",
        [](int n, int base_level, std::vector<complex> base,
           std::vector<std::vector<complex>> details) {
          const SphereGeometry g(n);
          Pyramid p{GridSignal(g, base_level, std::move(base)), {}};
          for (std::size_t i = 0; i < details.size(); ++i) {
            p.details.emplace_back(g, base_level + static_cast<int>(i) + 1, std::move(details[i]));
          }
          return transform::pyramid_reconstruct(p).values;
        },
        py::arg("n"), py::arg("base_level"), py::arg("base"), py::arg("details"));

  m.def("phi_m_variances",
        [](int mm, double lambda) { return report_dict(uncertainty::phi_m_variances(mm, lambda)); },
        py::arg("m"), py::arg("lam"));
  m.def("uncertainty_product",
        [](double lambda, std::vector<complex> coeffs) {
          return report_dict(uncertainty::uncertainty_product({lambda, std::move(coeffs)}));
        },
        py::arg("lam"), py::arg("coeffs"));
  m.def("uncertainty_table_csv",
        [](std::vector<int> ms, std::vector<double> lambdas) {
          return uncertainty::table_csv(uncertainty::uncertainty_table(ms, lambdas));
        },
        py::arg("ms"), py::arg("lambdas"));

  m.def("classify",
        [](double lambda, std::vector<complex> coeffs) {
          const auto c = posdef::classify({lambda, std::move(coeffs)});
          py::dict d;
          d["semidefinite"] = c.semidefinite;
          d["strict_up_to_cardinality"] = c.strict_up_to_cardinality;
          d["strictly_pd"] = c.strictly_pd;
          d["reason"] = c.reason;
          return d;
        },
        py::arg("lam"), py::arg("coeffs"));

  m.def("certify",
        [](int n, int max_j) {
          const auto r = certify::certify_all(SphereGeometry(n), max_j);
          return py::make_tuple(r.passed(), r.to_text());
        },
        py::arg("n"), py::arg("max_j"));
}
