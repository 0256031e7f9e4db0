#pragma once

#include <string>

#include <json.hpp>

#include "sphmra/mra.hpp"
#include "sphmra/posdef.hpp"
#include "sphmra/transform.hpp"
#include "sphmra/uncertainty.hpp"

namespace sphmra::io {

using nlohmann::json;

// Spectrum: {"n", "j", "entries": [{"l", "k": [k_1..k_{n-1}], "sign", "re", "im"}]}
json to_json(const Spectrum& spectrum);
Spectrum spectrum_from_json(const json& doc);

// GridSignal: {"n", "j", "values": [[re, im], ...]} in grid_nodes order.
json to_json(const GridSignal& signal);
GridSignal signal_from_json(const json& doc);

// Pyramid: {"base": GridSignal, "details": [GridSignal, ...]}.
json to_json(const Pyramid& pyramid);
Pyramid pyramid_from_json(const json& doc);

// Zonal spectrum: {"lambda": x} or {"n": n}, "coeffs": [c0, c1, ...] where each
// coefficient is a number or [re, im].
json to_json(const ZonalSpectrum& spec);
ZonalSpectrum zonal_from_json(const json& doc);

json to_json(const UncertaintyReport& report);
json to_json(const PdClassification& c);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

} // namespace sphmra::io
