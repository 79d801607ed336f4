#pragma once

#include "zernike/grid.hpp"
#include "zernike/interbasis.hpp"
#include "zernike/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zernike {

using nlohmann::json;

/// Lossless entry encoding: value = i^phase_k * sign * sqrt(num/den).
/// Radicand numerator/denominator are decimal strings (they outgrow int64),
/// plus a float rendering for direct consumption.
json exact_to_json(const ExactComplex& value);
ExactComplex exact_from_json(const json& j);

json tables_to_json(int n_max);
std::string tables_to_csv(int n_max);
std::vector<InterbasisMatrix> tables_from_json(const json& j);
std::vector<InterbasisMatrix> tables_from_csv(const std::string& text);

json grid_to_json(const GridSample& grid);
std::string grid_to_csv(const GridSample& grid);
GridSample grid_from_json(const json& j);
GridSample grid_from_csv(const std::string& text);

json spectrum_to_json(const WavefrontSpectrum& spec);
WavefrontSpectrum spectrum_from_json(const json& j);

json fit_report_to_json(const FitReport& report);

std::vector<Sample> samples_from_json(const json& j);
std::vector<Sample> samples_from_csv(const std::string& text);

}  // namespace zernike
