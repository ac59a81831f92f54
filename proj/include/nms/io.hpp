#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nms/config.hpp"
#include "nms/diffraction.hpp"
#include "nms/exact.hpp"
#include "nms/geometry.hpp"
#include "nms/measure.hpp"

namespace nms::io {

// "# config-hash: ... config: {...}" comment line for CSV outputs.
std::string provenance_line(const RunConfig& cfg);
nlohmann::json provenance_json(const RunConfig& cfg);

nlohmann::json to_json(const ExactWordSet& set, bool include_words);
nlohmann::json to_json(const EntropyResult& r);
nlohmann::json to_json(const InducedSystem& sys);
nlohmann::json to_json(const BirkhoffReport& rep);
nlohmann::json to_json(const Window& w);
nlohmann::json to_json(const diffraction::AcDensity& ac);

void write_points_csv(std::ostream& os, const RunConfig& cfg,
                      const std::vector<LiftedPoint>& pts);
void write_histogram_csv(std::ostream& os, const RunConfig& cfg, const Histogram& h);
void write_strip_csv(std::ostream& os, const RunConfig& cfg, const StripDataset& strip);
void write_ac_csv(std::ostream& os, const RunConfig& cfg, const diffraction::AcDensity& ac);
void write_pp_csv(std::ostream& os, const RunConfig& cfg,
                  const std::vector<diffraction::FourierPoint>& ks,
                  const std::vector<double>& amplitudes);
void write_spectrum_csv(std::ostream& os, const RunConfig& cfg,
                        const std::vector<diffraction::SpectrumSample>& samples);

// Minimal SVG emitters; raw CSV stays the authoritative output.
void svg_stem_plot(std::ostream& os, const std::vector<double>& x,
                   const std::vector<double>& y, const std::string& title);
void svg_polyline_plot(std::ostream& os, const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& title);
void svg_histogram_plot(std::ostream& os, const Histogram& h, const std::string& title);

}  // namespace nms::io
