#include "nihoapn/report.hpp"

#include <sstream>

#include "nihoapn/errors.hpp"

namespace nihoapn {

namespace {

Json histogram_json(const Histogram& h) {
    Json arr = Json::array();
    for (auto [value, count] : h) arr.push_back({value, count});
    return arr;
}

Histogram histogram_from(const Json& arr) {
    Histogram h;
    for (const auto& pair : arr) h[pair.at(0).get<std::uint64_t>()] = pair.at(1).get<std::uint64_t>();
    return h;
}

template <class T>
Json set_json(const std::set<T>& s) {
    return Json(std::vector<T>(s.begin(), s.end()));
}

template <class T>
std::set<T> set_from(const Json& j) {
    const auto v = j.get<std::vector<T>>();
    return {v.begin(), v.end()};
}

}  // namespace

std::string to_hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::uint64_t parse_hex(const std::string& s) {
    std::string digits = s;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.size() > 16 ||
        digits.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
        throw ParamError("bad_hex", "not a hex polynomial: '" + s + "'");
    }
    return std::stoull(digits, nullptr, 16);
}

void to_json(Json& j, const DiffSpectrum& s) {
    j = Json{{"omega", histogram_json(s.omega)}, {"delta", s.delta}};
}
void from_json(const Json& j, DiffSpectrum& s) {
    s.omega = histogram_from(j.at("omega"));
    s.delta = j.at("delta").get<std::uint64_t>();
}

void to_json(Json& j, const BoomSpectrum& s) {
    j = Json{{"nu", histogram_json(s.nu)}, {"beta", s.beta}};
}
void from_json(const Json& j, BoomSpectrum& s) {
    s.nu = histogram_from(j.at("nu"));
    s.beta = j.at("beta").get<std::uint64_t>();
}

void to_json(Json& j, const NihoParams& p) {
    j = Json{{"m", p.m}, {"k", p.k}, {"canonical_k", p.canonical_k()}, {"s", p.s}, {"d", p.d}};
}
void from_json(const Json& j, NihoParams& p) {
    p.m = j.at("m").get<int>();
    p.k = j.at("k").get<int>();
    p.s = j.at("s").get<std::uint64_t>();
    p.d = j.at("d").get<std::uint64_t>();
}

void to_json(Json& j, const PredictionReport& r) {
    j = Json{{"params", r.params},
             {"modulus", to_hex(r.modulus)},
             {"predicted_ds", r.predicted_ds},
             {"actual_ds", r.actual_ds},
             {"predicted_bs", r.predicted_bs},
             {"actual_bs", r.actual_bs},
             {"match_ds", r.match_ds},
             {"match_bs", r.match_bs}};
}
void from_json(const Json& j, PredictionReport& r) {
    r.params = j.at("params").get<NihoParams>();
    r.modulus = parse_hex(j.at("modulus").get<std::string>());
    r.predicted_ds = j.at("predicted_ds").get<DiffSpectrum>();
    r.actual_ds = j.at("actual_ds").get<DiffSpectrum>();
    r.predicted_bs = j.at("predicted_bs").get<BoomSpectrum>();
    r.actual_bs = j.at("actual_bs").get<BoomSpectrum>();
    r.match_ds = j.at("match_ds").get<bool>();
    r.match_bs = j.at("match_bs").get<bool>();
}

void to_json(Json& j, const SurveyRow& r) {
    j = Json{{"s", r.s},
             {"d", r.d},
             {"delta", r.delta},
             {"locally_apn", r.locally_apn},
             {"in_theorem_orbit", r.in_theorem_orbit},
             {"excluded", r.excluded},
             {"spectrum", r.spectrum}};
}
void from_json(const Json& j, SurveyRow& r) {
    r.s = j.at("s").get<std::uint64_t>();
    r.d = j.at("d").get<std::uint64_t>();
    r.delta = j.at("delta").get<std::uint64_t>();
    r.locally_apn = j.at("locally_apn").get<bool>();
    r.in_theorem_orbit = j.at("in_theorem_orbit").get<bool>();
    r.excluded = j.at("excluded").get<bool>();
    r.spectrum = j.at("spectrum").get<DiffSpectrum>();
}

// Wall-clock time is deliberately absent; it lives in the run manifest so
// reports stay byte-identical across runs.
void to_json(Json& j, const SurveyReport& r) {
    j = Json{{"m", r.m},
             {"covered", r.covered},
             {"orbit_spectra_consistent", r.orbit_spectra_consistent},
             {"cyclotomic_shifts_consistent",
              r.cyclotomic_shifts_consistent ? Json(*r.cyclotomic_shifts_consistent) : Json()},
             {"locally_apn_s", set_json(r.locally_apn_s)},
             {"theorem_orbit_s", set_json(r.theorem_orbit_s)},
             {"excluded_s", set_json(r.excluded_s)},
             {"uncovered_s", set_json(r.uncovered_s)},
             {"missing_s", set_json(r.missing_s)},
             {"rows", r.rows}};
}
void from_json(const Json& j, SurveyReport& r) {
    r.m = j.at("m").get<int>();
    r.covered = j.at("covered").get<bool>();
    r.orbit_spectra_consistent = j.at("orbit_spectra_consistent").get<bool>();
    const auto& cyc = j.at("cyclotomic_shifts_consistent");
    r.cyclotomic_shifts_consistent = cyc.is_null() ? std::nullopt : std::optional<bool>(cyc.get<bool>());
    r.locally_apn_s = set_from<std::uint64_t>(j.at("locally_apn_s"));
    r.theorem_orbit_s = set_from<std::uint64_t>(j.at("theorem_orbit_s"));
    r.excluded_s = set_from<std::uint64_t>(j.at("excluded_s"));
    r.uncovered_s = set_from<std::uint64_t>(j.at("uncovered_s"));
    r.missing_s = set_from<std::uint64_t>(j.at("missing_s"));
    r.rows = j.at("rows").get<std::vector<SurveyRow>>();
    r.seconds = 0.0;
}

void to_json(Json& j, const Remark4Instance& r) {
    j = Json{{"m", r.m},           {"k", r.k},         {"s", r.s},
             {"d", r.d},           {"delta", r.delta}, {"locally_apn", r.locally_apn}};
}
void from_json(const Json& j, Remark4Instance& r) {
    r.m = j.at("m").get<int>();
    r.k = j.at("k").get<int>();
    r.s = j.at("s").get<std::uint64_t>();
    r.d = j.at("d").get<std::uint64_t>();
    r.delta = j.at("delta").get<std::uint64_t>();
    r.locally_apn = j.at("locally_apn").get<bool>();
}

void to_json(Json& j, const LemmaTally& t) {
    j = Json{{"lemma", to_string(t.lemma)},
             {"n", t.n},
             {"exhaustive", t.exhaustive},
             {"cases", t.cases},
             {"passes", t.passes},
             {"failures", t.failures},
             {"degenerate", t.degenerate},
             {"circle_cases", t.circle_cases},
             {"alternate_form_mismatches", t.alternate_form_mismatches},
             {"counterexamples", t.counterexamples}};
}
void from_json(const Json& j, LemmaTally& t) {
    const auto id = parse_lemma_id(j.at("lemma").get<std::string>());
    if (!id) throw ParamError("bad_report", "unknown lemma id in report");
    t.lemma = *id;
    t.n = j.at("n").get<int>();
    t.exhaustive = j.at("exhaustive").get<bool>();
    t.cases = j.at("cases").get<std::uint64_t>();
    t.passes = j.at("passes").get<std::uint64_t>();
    t.failures = j.at("failures").get<std::uint64_t>();
    t.degenerate = j.at("degenerate").get<std::uint64_t>();
    t.circle_cases = j.at("circle_cases").get<std::uint64_t>();
    t.alternate_form_mismatches = j.at("alternate_form_mismatches").get<std::uint64_t>();
    t.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
}

void to_json(Json& j, const LemmaSuiteReport& r) {
    j = Json{{"seed", r.seed},
             {"samples", r.samples},
             {"vacuous", r.vacuous},
             {"total_failures", r.total_failures()},
             {"tallies", r.tallies}};
}
void from_json(const Json& j, LemmaSuiteReport& r) {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.vacuous = j.at("vacuous").get<bool>();
    r.tallies = j.at("tallies").get<std::vector<LemmaTally>>();
}

void to_json(Json& j, const SpectrumReport& r) {
    j = Json{{"field", {{"n", r.n}, {"modulus", to_hex(r.modulus)}}},
             {"d", r.d},
             {"diff_spectrum", r.diff},
             {"boom_spectrum", r.boom},
             {"locally_apn", r.locally_apn},
             {"permutation", r.permutation},
             {"niho", r.niho ? Json(*r.niho) : Json()},
             {"prediction", r.prediction ? Json(*r.prediction) : Json()}};
}
void from_json(const Json& j, SpectrumReport& r) {
    r.n = j.at("field").at("n").get<int>();
    r.modulus = parse_hex(j.at("field").at("modulus").get<std::string>());
    r.d = j.at("d").get<std::uint64_t>();
    r.diff = j.at("diff_spectrum").get<DiffSpectrum>();
    r.boom = j.at("boom_spectrum").get<BoomSpectrum>();
    r.locally_apn = j.at("locally_apn").get<bool>();
    r.permutation = j.at("permutation").get<bool>();
    const auto& niho = j.at("niho");
    r.niho = niho.is_null() ? std::nullopt : std::optional<NihoParams>(niho.get<NihoParams>());
    const auto& pred = j.at("prediction");
    r.prediction =
        pred.is_null() ? std::nullopt : std::optional<PredictionReport>(pred.get<PredictionReport>());
}

void to_json(Json& j, const RunManifest& m) {
    Json moduli = Json::object();
    for (auto [n, f] : m.field_moduli_used) moduli[std::to_string(n)] = to_hex(f);
    j = Json{{"tool_version", m.tool_version},
             {"field_moduli_used", moduli},
             {"seed", m.seed},
             {"command_line", m.command_line},
             {"wall_clock", m.wall_clock}};
}
void from_json(const Json& j, RunManifest& m) {
    m.tool_version = j.at("tool_version").get<std::string>();
    m.field_moduli_used.clear();
    for (const auto& [n, f] : j.at("field_moduli_used").items()) {
        m.field_moduli_used[std::stoi(n)] = parse_hex(f.get<std::string>());
    }
    m.seed = j.at("seed").get<std::uint64_t>();
    m.command_line = j.at("command_line").get<std::string>();
    m.wall_clock = j.at("wall_clock").get<double>();
}

Json envelope(const std::string& kind, const Json& payload) {
    Json j{{"schema_version", kSchemaVersion}, {"kind", kind}};
    for (const auto& [key, value] : payload.items()) j[key] = value;
    return j;
}

std::string survey_csv(const SurveyReport& r) {
    std::ostringstream os;
    os << "s,d,delta,locally_apn,in_theorem_orbit\n";
    for (const SurveyRow& row : r.rows) {
        os << row.s << ',' << row.d << ',' << row.delta << ',' << (row.locally_apn ? 1 : 0) << ','
           << (row.in_theorem_orbit ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace nihoapn
