#pragma once

// JSON / CSV serialization of every report type. JSON is the public format:
// a top-level schema_version, spectra as sorted [value, count] pairs,
// field moduli as hex strings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "nihoapn/closed_forms.hpp"
#include "nihoapn/lemma_suite.hpp"
#include "nihoapn/niho.hpp"
#include "nihoapn/spectra.hpp"
#include "nihoapn/survey.hpp"

namespace nihoapn {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string to_hex(std::uint64_t v);
// Accepts an optional 0x prefix; throws ParamError on junk.
std::uint64_t parse_hex(const std::string& s);

void to_json(Json& j, const DiffSpectrum& s);
void from_json(const Json& j, DiffSpectrum& s);
void to_json(Json& j, const BoomSpectrum& s);
void from_json(const Json& j, BoomSpectrum& s);
void to_json(Json& j, const NihoParams& p);
void from_json(const Json& j, NihoParams& p);
void to_json(Json& j, const PredictionReport& r);
void from_json(const Json& j, PredictionReport& r);
void to_json(Json& j, const SurveyRow& r);
void from_json(const Json& j, SurveyRow& r);
void to_json(Json& j, const SurveyReport& r);
void from_json(const Json& j, SurveyReport& r);
void to_json(Json& j, const Remark4Instance& r);
void from_json(const Json& j, Remark4Instance& r);
void to_json(Json& j, const LemmaTally& t);
void from_json(const Json& j, LemmaTally& t);
void to_json(Json& j, const LemmaSuiteReport& r);
void from_json(const Json& j, LemmaSuiteReport& r);

// Spectrum of a single power function, as emitted by `spectrum`.
struct SpectrumReport {
    int n = 0;
    std::uint64_t modulus = 0;
    std::uint64_t d = 0;
    DiffSpectrum diff;
    BoomSpectrum boom;
    bool locally_apn = false;
    bool permutation = false;
    std::optional<NihoParams> niho;
    std::optional<PredictionReport> prediction;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

void to_json(Json& j, const SpectrumReport& r);
void from_json(const Json& j, SpectrumReport& r);

// Reproducibility record written next to every report file.
struct RunManifest {
    std::string tool_version;
    std::map<int, std::uint64_t> field_moduli_used;
    std::uint64_t seed = 0;
    std::string command_line;
    double wall_clock = 0.0;

    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

void to_json(Json& j, const RunManifest& m);
void from_json(const Json& j, RunManifest& m);

// Wraps a payload as {"schema_version": 1, "kind": kind, ...payload}.
Json envelope(const std::string& kind, const Json& payload);

// Columns: s,d,delta,locally_apn,in_theorem_orbit.
std::string survey_csv(const SurveyReport& r);

}  // namespace nihoapn
