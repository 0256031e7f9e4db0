#include "sphmra/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sphmra::io {

namespace {

json complex_pair(complex z) { return json::array({z.real(), z.imag()}); }

complex parse_complex(const json& v) {
  if (v.is_number()) {
    return {v.get<double>(), 0.0};
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw std::invalid_argument("expected a number or a [re, im] pair, got " + v.dump());
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

} // namespace

json to_json(const Spectrum& spectrum) {
  json entries = json::array();
  for (const auto& [index, value] : spectrum.entries) {
    entries.push_back({{"l", index.l},
                       {"k", index.chain},
                       {"sign", index.sign},
                       {"re", value.real()},
                       {"im", value.imag()}});
  }
  return {{"n", spectrum.geometry.n()}, {"j", spectrum.level}, {"entries", entries}};
}

Spectrum spectrum_from_json(const json& doc) {
  const SphereGeometry geometry(field(doc, "n").get<int>());
  Spectrum s(geometry, field(doc, "j").get<int>());
  for (const auto& e : field(doc, "entries")) {
    HarmonicIndex index{field(e, "l").get<int>(), field(e, "k").get<std::vector<int>>(),
                        e.value("sign", 1)};
    validate_index(geometry, index);
    const complex value{e.value("re", 0.0), e.value("im", 0.0)};
    if (!s.entries.emplace(index, value).second) {
      throw std::invalid_argument("duplicate spectrum entry");
    }
  }
  return s;
}

json to_json(const GridSignal& signal) {
  json values = json::array();
  for (const auto& v : signal.values) {
    values.push_back(complex_pair(v));
  }
  return {{"n", signal.geometry.n()}, {"j", signal.level}, {"values", values}};
}

GridSignal signal_from_json(const json& doc) {
  const SphereGeometry geometry(field(doc, "n").get<int>());
  const int j = field(doc, "j").get<int>();
  std::vector<complex> values;
  for (const auto& v : field(doc, "values")) {
    values.push_back(parse_complex(v));
  }
  return GridSignal(geometry, j, std::move(values));
}

json to_json(const Pyramid& pyramid) {
  json details = json::array();
  for (const auto& d : pyramid.details) {
    details.push_back(to_json(d));
  }
  return {{"base", to_json(pyramid.base)}, {"details", details}};
}

Pyramid pyramid_from_json(const json& doc) {
  Pyramid p{signal_from_json(field(doc, "base")), {}};
  for (const auto& d : field(doc, "details")) {
    p.details.push_back(signal_from_json(d));
  }
  return p;
}

json to_json(const ZonalSpectrum& spec) {
  json coeffs = json::array();
  for (const auto& c : spec.coeffs) {
    if (c.imag() == 0.0) {
      coeffs.push_back(c.real());
    } else {
      coeffs.push_back(complex_pair(c));
    }
  }
  return {{"lambda", spec.lambda}, {"coeffs", coeffs}};
}

ZonalSpectrum zonal_from_json(const json& doc) {
  ZonalSpectrum z;
  if (doc.contains("lambda")) {
    z.lambda = doc.at("lambda").get<double>();
  } else if (doc.contains("n")) {
    z.lambda = SphereGeometry(doc.at("n").get<int>()).lambda();
  } else {
    throw std::invalid_argument("zonal spectrum needs \"lambda\" or \"n\"");
  }
  if (!(z.lambda > 0.0)) {
    throw std::invalid_argument("zonal spectrum needs lambda > 0");
  }
  for (const auto& c : field(doc, "coeffs")) {
    z.coeffs.push_back(parse_complex(c));
  }
  if (z.coeffs.empty()) {
    throw std::invalid_argument("zonal spectrum has no coefficients");
  }
  return z;
}

json to_json(const UncertaintyReport& report) {
  return {{"var_space", report.var_space},
          {"var_momentum", report.var_momentum},
          {"product", report.product}};
}

json to_json(const PdClassification& c) {
  return {{"semidefinite", c.semidefinite},
          {"strict_up_to_cardinality", c.strict_up_to_cardinality},
          {"strictly_pd", c.strictly_pd},
          {"reason", c.reason}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << doc.dump(1) << '\n';
}

} // namespace sphmra::io
