#include "nihoapn/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nihoapn/closed_forms.hpp"
#include "nihoapn/errors.hpp"
#include "nihoapn/lemma_suite.hpp"
#include "nihoapn/niho.hpp"
#include "nihoapn/report.hpp"
#include "nihoapn/spectra.hpp"
#include "nihoapn/survey.hpp"
#include "nihoapn/version.hpp"

namespace nihoapn::cli {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

enum class Format { Json, Csv, Table };

struct Common {
    unsigned jobs = 1;
    std::string format = "json";
    std::string out_path;
    std::string modulus_hex;

    Format fmt() const {
        if (format == "json") return Format::Json;
        if (format == "csv") return Format::Csv;
        if (format == "table") return Format::Table;
        throw ParamError("bad_format", "--format must be json, csv or table");
    }
    std::optional<u64> modulus() const {
        if (modulus_hex.empty()) return std::nullopt;
        return parse_hex(modulus_hex);
    }
};

void add_common(CLI::App* sub, Common& c, bool with_modulus) {
    sub->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--format", c.format, "Output format: json, csv or table")
        ->capture_default_str();
    sub->add_option("--out", c.out_path, "Write the report here instead of stdout");
    if (with_modulus) {
        sub->add_option("--modulus", c.modulus_hex, "Irreducible modulus as hex bit pattern");
    }
}

void write_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

class Output {
public:
    Output(const Common& c, std::ostream& out) : common_(c), out_(out) {}

    void emit(const std::string& text) const {
        if (common_.out_path.empty()) {
            out_ << text;
            return;
        }
        write_file(common_.out_path, text);
    }
    static void write_file(const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParamError("io_error", "cannot write " + path);
        f << text;
    }

private:
    const Common& common_;
    std::ostream& out_;
};

void write_manifest(const Common& c, RunManifest m, Clock::time_point start) {
    if (c.out_path.empty()) return;
    m.tool_version = kVersion;
    m.wall_clock = std::chrono::duration<double>(Clock::now() - start).count();
    Output::write_file(c.out_path + ".manifest.json", Json(m).dump(2) + "\n");
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

void histogram_rows(std::ostringstream& os, const std::string& table, const Histogram& h) {
    for (auto [value, count] : h) os << table << ',' << value << ',' << count << '\n';
}

std::string histogram_inline(const Histogram& h) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [value, count] : h) {
        os << (first ? "" : ", ") << value << ':' << count;
        first = false;
    }
    os << '}';
    return os.str();
}

// ---- spectrum / boomerang ----

struct SpectrumArgs {
    Common common;
    std::optional<int> n, m, k;
    std::optional<u64> d;
    bool relaxed = false;
};

int cmd_spectrum(const SpectrumArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    const auto start = Clock::now();
    const bool raw = a.n || a.d;
    const bool niho = a.m || a.k;
    if (raw == niho || (raw && !(a.n && a.d)) || (niho && !(a.m && a.k))) {
        throw ParamError("usage", "give either --n and --d, or --m and --k");
    }
    const Format fmt = a.common.fmt();

    SpectrumReport rep;
    std::optional<NihoParams> params;
    if (niho) {
        params = a.relaxed ? build_niho_relaxed(*a.m, *a.k) : build_niho(*a.m, *a.k);
    }
    const int n = raw ? *a.n : 2 * params->m;
    const Field field = make_field(n, a.common.modulus());
    const u64 d = raw ? *a.d : params->d;
    const PowerFunction f(field, d);
    const auto ddt = ddt_row(f, a.common.jobs);

    rep.n = n;
    rep.modulus = field.modulus();
    rep.d = f.exponent();
    rep.diff = diff_spectrum_from_row(ddt);
    rep.boom = boom_spectrum(f, a.common.jobs);
    rep.locally_apn = is_locally_apn_row(ddt);
    rep.permutation = is_permutation(f);
    rep.niho = params;
    if (params && !a.relaxed) {
        PredictionReport p;
        p.params = *params;
        p.modulus = field.modulus();
        p.predicted_ds = predicted_diff_spectrum(params->m);
        p.predicted_bs = predicted_boom_spectrum(params->m);
        p.actual_ds = rep.diff;
        p.actual_bs = rep.boom;
        p.match_ds = p.actual_ds == p.predicted_ds;
        p.match_bs = p.actual_bs == p.predicted_bs;
        rep.prediction = p;
    }

    std::ostringstream os;
    switch (fmt) {
        case Format::Json:
            os << envelope("spectrum", Json(rep)).dump(2) << '\n';
            break;
        case Format::Csv:
            os << "table,value,count\n";
            histogram_rows(os, "ddt", rep.diff.omega);
            histogram_rows(os, "bct", rep.boom.nu);
            break;
        case Format::Table:
            os << "field      GF(2^" << n << "), modulus " << to_hex(rep.modulus) << '\n'
               << "exponent   " << rep.d << '\n'
               << "DDT        " << histogram_inline(rep.diff.omega) << "  delta = " << rep.diff.delta
               << '\n'
               << "BCT        " << histogram_inline(rep.boom.nu) << "  beta = " << rep.boom.beta
               << '\n'
               << "locally-APN " << std::boolalpha << rep.locally_apn << ", permutation "
               << rep.permutation << '\n';
            if (rep.prediction) {
                os << "prediction match_ds = " << rep.prediction->match_ds
                   << ", match_bs = " << rep.prediction->match_bs << '\n';
            }
            break;
    }
    Output(a.common, out).emit(os.str());
    write_manifest(a.common, RunManifest{{}, {{n, field.modulus()}}, 0, join_args(args), 0.0},
                   start);

    if (rep.prediction && !(rep.prediction->match_ds && rep.prediction->match_bs)) {
        return kExitMismatch;
    }
    return kExitOk;
}

// ---- survey ----

struct SurveyArgs {
    Common common;
    int m = 0;
    std::optional<int> max_m;
    bool extended = false;
    bool cyclotomic = false;
};

int cmd_survey(const SurveyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    const auto start = Clock::now();
    const int hi = a.max_m.value_or(a.m);
    const Format fmt = a.common.fmt();
    for (int m : {a.m, hi}) {
        if (m < 2 || m > kSurveyMaxM) {
            throw ParamError("m_out_of_range", "survey: m = " + std::to_string(m) +
                                                   " outside [2, " + std::to_string(kSurveyMaxM) +
                                                   "]");
        }
        if (m > kSurveyDefaultMaxM && !a.extended) {
            throw ParamError("extended_required", "survey: m = " + std::to_string(m) +
                                                      " needs --extended (long run)");
        }
    }
    if (hi < a.m) throw ParamError("usage", "--max-m must be >= --m");

    std::vector<SurveyReport> reports;
    RunManifest manifest;
    for (int m = a.m; m <= hi; ++m) {
        reports.push_back(survey_niho(m, SurveyOptions{a.common.jobs, a.cyclotomic}));
        manifest.field_moduli_used[2 * m] = make_field(2 * m).modulus();
    }
    const bool all_covered = std::all_of(reports.begin(), reports.end(),
                                         [](const SurveyReport& r) { return r.covered; });

    Json doc = envelope("survey", Json{{"all_covered", all_covered}, {"reports", reports}});
    std::ostringstream summary;
    for (const auto& r : reports) {
        summary << "survey m=" << r.m << " covered=" << std::boolalpha << r.covered
                << " locally_apn=" << r.locally_apn_s.size()
                << " orbit_spectra_consistent=" << r.orbit_spectra_consistent;
        if (!r.uncovered_s.empty()) summary << " uncovered_s=" << Json(r.uncovered_s).dump();
        if (!r.missing_s.empty()) summary << " missing_s=" << Json(r.missing_s).dump();
        summary << '\n';
    }

    if (!a.common.out_path.empty()) {
        Output::write_file(a.common.out_path, doc.dump(2) + "\n");
        const std::filesystem::path base(a.common.out_path);
        for (const auto& r : reports) {
            auto csv = base;
            csv.replace_extension();
            csv += (reports.size() == 1 ? "" : "_m" + std::to_string(r.m)) + std::string(".csv");
            Output::write_file(csv.string(), survey_csv(r));
        }
        out << summary.str();
        manifest.command_line = join_args(args);
        write_manifest(a.common, manifest, start);
    } else if (fmt == Format::Json) {
        out << doc.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        for (const auto& r : reports) out << survey_csv(r);
    } else {
        out << summary.str();
    }
    return all_covered ? kExitOk : kExitMismatch;
}

// ---- lemmas ----

struct LemmaArgs {
    Common common;
    u64 seed = 1;
    long long samples = 10000;
    std::vector<std::string> only;
    std::optional<int> n;
};

int cmd_lemmas(const LemmaArgs& a, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    const auto start = Clock::now();
    if (a.samples < 0) throw ParamError("usage", "--samples must be >= 0");
    const Format fmt = a.common.fmt();
    LemmaSuiteOptions opts;
    opts.seed = a.seed;
    opts.samples = static_cast<u64>(a.samples);
    opts.n = a.n;
    for (const auto& name : a.only) {
        const auto id = parse_lemma_id(name);
        if (!id) throw ParamError("usage", "unknown lemma selector '" + name + "'");
        opts.only.insert(*id);
    }
    if (a.n) (void)make_field(*a.n);

    const LemmaSuiteReport rep = run_lemma_suite(opts);
    if (rep.vacuous) {
        err << "warning: some selected checks ran on zero cases (vacuous pass)\n";
    }

    std::ostringstream os;
    switch (fmt) {
        case Format::Json:
            os << envelope("lemmas", Json(rep)).dump(2) << '\n';
            break;
        case Format::Csv:
            os << "lemma,n,cases,passes,failures\n";
            for (const auto& t : rep.tallies) {
                os << to_string(t.lemma) << ',' << t.n << ',' << t.cases << ',' << t.passes << ','
                   << t.failures << '\n';
            }
            break;
        case Format::Table:
            for (const auto& t : rep.tallies) {
                os << to_string(t.lemma) << " n=" << t.n << (t.exhaustive ? " exhaustive" : " sampled")
                   << " cases=" << t.cases << " passes=" << t.passes << " failures=" << t.failures;
                if (t.lemma == LemmaId::Phi || t.lemma == LemmaId::Lemma2) {
                    os << " alternate_form_mismatches=" << t.alternate_form_mismatches;
                }
                os << '\n';
            }
            break;
    }
    Output(a.common, out).emit(os.str());
    RunManifest manifest;
    manifest.seed = a.seed;
    manifest.command_line = join_args(args);
    for (const auto& t : rep.tallies) manifest.field_moduli_used[t.n] = make_field(t.n).modulus();
    write_manifest(a.common, manifest, start);
    return rep.total_failures() == 0 ? kExitOk : kExitMismatch;
}

// ---- verify ----

struct VerifyArgs {
    Common common;
    int min_m = 2;
    int max_m = 8;
    std::optional<int> k;
    bool non_coprime = false;
};

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    const auto start = Clock::now();
    const Format fmt = a.common.fmt();
    if (a.min_m < 2 || a.max_m > kVerifyMaxM || a.min_m > a.max_m) {
        throw ParamError("m_out_of_range", "verify: need 2 <= --min-m <= --max-m <= " +
                                               std::to_string(kVerifyMaxM));
    }
    const auto modulus = a.common.modulus();
    if (modulus && a.min_m != a.max_m) {
        throw ParamError("usage", "--modulus needs a single field (--min-m = --max-m)");
    }

    RunManifest manifest;
    manifest.command_line = join_args(args);
    std::ostringstream os;
    bool ok = true;

    if (a.non_coprime) {
        if (a.max_m > 8) throw ParamError("m_out_of_range", "--non-coprime supports m <= 8");
        std::vector<Remark4Instance> inst;
        for (const auto& r : remark4_instances(a.max_m, a.common.jobs)) {
            if (r.m >= a.min_m) inst.push_back(r);
        }
        for (const auto& r : inst) {
            ok = ok && !r.locally_apn;
            manifest.field_moduli_used[2 * r.m] = make_field(2 * r.m).modulus();
        }
        if (fmt == Format::Json) {
            os << envelope("non_coprime", Json{{"none_locally_apn", ok}, {"instances", inst}}).dump(2)
               << '\n';
        } else {
            if (fmt == Format::Csv) os << "m,k,s,d,delta,locally_apn\n";
            for (const auto& r : inst) {
                if (fmt == Format::Csv) {
                    os << r.m << ',' << r.k << ',' << r.s << ',' << r.d << ',' << r.delta << ','
                       << (r.locally_apn ? 1 : 0) << '\n';
                } else {
                    os << "m=" << r.m << " k=" << r.k << " s=" << r.s << " d=" << r.d
                       << " delta=" << r.delta << " locally_apn=" << std::boolalpha
                       << r.locally_apn << '\n';
                }
            }
        }
    } else {
        std::vector<PredictionReport> results;
        for (int m = a.min_m; m <= a.max_m; ++m) {
            for (int k = 1; k < 2 * m; ++k) {
                if (a.k && *a.k != k) continue;
                if (!satisfies_hypotheses(m, k)) continue;
                results.push_back(verify_theorems(m, k, a.common.jobs, modulus));
                manifest.field_moduli_used[2 * m] = results.back().modulus;
            }
        }
        if (results.empty()) throw ParamError("usage", "no (m, k) in range meets the hypotheses");
        for (const auto& r : results) ok = ok && r.match_ds && r.match_bs;
        if (fmt == Format::Json) {
            os << envelope("verify", Json{{"all_match", ok}, {"results", results}}).dump(2) << '\n';
        } else {
            if (fmt == Format::Csv) os << "m,k,s,d,match_ds,match_bs\n";
            for (const auto& r : results) {
                const auto& p = r.params;
                if (fmt == Format::Csv) {
                    os << p.m << ',' << p.k << ',' << p.s << ',' << p.d << ',' << r.match_ds << ','
                       << r.match_bs << '\n';
                } else {
                    os << "m=" << p.m << " k=" << p.k << " s=" << p.s << " d=" << p.d
                       << std::boolalpha << " match_ds=" << r.match_ds
                       << " match_bs=" << r.match_bs << '\n';
                }
            }
        }
    }
    Output(a.common, out).emit(os.str());
    write_manifest(a.common, manifest, start);
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Differential and boomerang spectra of power functions over GF(2^n)", "nihoapn"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    SpectrumArgs sp;
    auto add_spectrum_opts = [&](CLI::App* sub) {
        sub->add_option("--n", sp.n, "Field degree (raw mode)");
        sub->add_option("--d", sp.d, "Exponent (raw mode)");
        sub->add_option("--m", sp.m, "Half degree, field GF(2^(2m)) (Niho mode)");
        sub->add_option("--k", sp.k, "Niho parameter k (Niho mode)");
        sub->add_flag("--relaxed", sp.relaxed, "Niho mode without the gcd(k, m) = 1 hypothesis");
        add_common(sub, sp.common, true);
    };
    auto* spectrum = app.add_subcommand("spectrum", "DDT and BCT spectra of x^d");
    add_spectrum_opts(spectrum);
    auto* boomerang = app.add_subcommand("boomerang", "Alias of spectrum");
    add_spectrum_opts(boomerang);

    SurveyArgs sv;
    auto* survey = app.add_subcommand("survey", "Locally-APN sweep over normalized Niho exponents");
    survey->add_option("--m", sv.m, "Half degree (first m of the range)")->required();
    survey->add_option("--max-m", sv.max_m, "Last m of the range");
    survey->add_flag("--extended", sv.extended, "Allow m = 9, 10");
    survey->add_flag("--cyclotomic-shifts", sv.cyclotomic,
                     "Also check that d * 2^i leaves every spectrum unchanged");
    add_common(survey, sv.common, false);

    LemmaArgs lm;
    auto* lemmas = app.add_subcommand("lemmas", "Run the lemma checkers");
    lemmas->add_option("--seed", lm.seed, "RNG seed")->capture_default_str();
    lemmas->add_option("--samples", lm.samples, "Random samples per field for sampled lemmas")
        ->capture_default_str();
    lemmas->add_option("--only", lm.only, "lemma1..lemma5 or phi (repeatable)");
    lemmas->add_option("--n", lm.n, "Restrict to one field degree");
    add_common(lemmas, lm.common, false);

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Closed forms against brute force over an (m, k) grid");
    verify->add_option("--min-m", vf.min_m)->capture_default_str();
    verify->add_option("--max-m", vf.max_m)->capture_default_str();
    verify->add_option("--m", vf.min_m, "Shorthand for --min-m M --max-m M")
        ->each([&](const std::string& v) { vf.max_m = std::stoi(v); });
    verify->add_option("--k", vf.k, "Only this k");
    verify->add_flag("--non-coprime", vf.non_coprime,
                     "Classify the gcd(k, m) > 1 instances instead (expected: none locally-APN)");
    add_common(verify, vf.common, true);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return kExitUsage;
    }

    try {
        if (spectrum->parsed() || boomerang->parsed()) return cmd_spectrum(sp, args, out);
        if (survey->parsed()) return cmd_survey(sv, args, out);
        if (lemmas->parsed()) return cmd_lemmas(lm, args, out, err);
        if (verify->parsed()) return cmd_verify(vf, args, out);
    } catch (const ParamError& e) {
        write_error(err, e.code(), e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        write_error(err, "domain", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nihoapn::cli
