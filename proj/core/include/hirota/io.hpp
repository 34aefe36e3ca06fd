#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hirota/certify.hpp"
#include "hirota/generators.hpp"
#include "hirota/point.hpp"
#include "hirota/soliton.hpp"

namespace hirota {

// JSON forms are documented in docs/formats.md; every writer emits
// "schema": 1 and renders rationals as "num" / "num/den" strings. Readers
// reject float literals in rational fields and unknown schema versions, and
// report malformed input as InputError. Object keys are emitted sorted, so
// output bytes are deterministic.

std::string point_to_json(const HirotaPoint& p);
HirotaPoint point_from_json(std::string_view text);

std::string params_to_json(const MainParams& params);
MainParams params_from_json(std::string_view text);

std::string soliton_to_json(const SolitonData& data);
// Accepts either an explicit "pluecker" table or a "matrix" to expand.
SolitonData soliton_from_json(std::string_view text);

std::string generators_to_json(const GeneratorSet& set);
// Rebuilds each generator from its label; the serialized terms are derived
// data and are not re-read.
GeneratorSet generators_from_json(std::string_view text);

std::string report_to_json(const CertReport& report,
                           bool include_timings = true);
CertReport report_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

HirotaPoint read_point(const std::filesystem::path& path);
MainParams read_params(const std::filesystem::path& path);
SolitonData read_soliton(const std::filesystem::path& path);
GeneratorSet read_generators(const std::filesystem::path& path);
CertReport read_report(const std::filesystem::path& path);
void write_report(const CertReport& report,
                  const std::filesystem::path& path);

}  // namespace hirota
