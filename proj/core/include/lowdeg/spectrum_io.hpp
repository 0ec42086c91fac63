#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <variant>

#include "lowdeg/spectrum.hpp"

namespace lowdeg {

// Spectrum document: {"version": 1, "kind": "operator"|"superop"|"boolean",
// "n": <sites>, "entries": [{"key": "013", "re": .., "im": ..}, ...]}.
// Superop entries carry "x" and "y" keys instead of "key"; keys are emitted
// in lexicographic order and doubles survive a round trip bit-exactly.

nlohmann::json to_json(const OperatorSpectrum& spec);
nlohmann::json to_json(const SuperopSpectrum& spec);
nlohmann::json to_json(const BooleanSpectrum& spec);

using AnySpectrum = std::variant<OperatorSpectrum, SuperopSpectrum, BooleanSpectrum>;

AnySpectrum spectrum_from_json(const nlohmann::json& doc);

void save_spectrum(const std::filesystem::path& path, const AnySpectrum& spec);
AnySpectrum load_spectrum(const std::filesystem::path& path);

std::string kind_of(const AnySpectrum& spec);

}  // namespace lowdeg
