#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nihoapn/cli.hpp"
#include "nihoapn/closed_forms.hpp"
#include "nihoapn/lemma_suite.hpp"
#include "nihoapn/report.hpp"
#include "nihoapn/survey.hpp"

using namespace nihoapn;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
    Json error() const { return Json::parse(err); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "nihoapn");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("nihoapn_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

template <class T>
void round_trip(const T& value) {
    const Json j = value;
    const T back = Json::parse(j.dump()).get<T>();
    CHECK(back == value);
    CHECK(Json(back).dump() == j.dump());
}

}  // namespace

TEST_SUITE("cli_reports") {

TEST_CASE("spectrum in Niho mode reports matching predictions") {
    const Run r = run({"spectrum", "--m", "3", "--k", "2"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = r.json();
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["kind"] == "spectrum");
    CHECK(j["prediction"]["match_ds"] == true);
    CHECK(j["prediction"]["match_bs"] == true);
    CHECK(j["niho"]["s"] == 2);
    CHECK(j["field"]["modulus"] == "0x43");
}

TEST_CASE("spectrum in raw mode") {
    const Run r = run({"spectrum", "--n", "4", "--d", "7"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = r.json();
    CHECK(j["diff_spectrum"]["delta"] == 4);
    CHECK(j["boom_spectrum"]["beta"] == 6);
    CHECK(j["diff_spectrum"]["omega"] == Json::parse("[[0,9],[2,6],[4,1]]"));
    CHECK(j["prediction"].is_null());
    CHECK(run({"boomerang", "--n", "4", "--d", "7"}).out == r.out);
}

TEST_CASE("parameter errors exit 2 with error JSON") {
    const Run zero = run({"spectrum", "--n", "4", "--d", "0"});
    CHECK(zero.code == cli::kExitUsage);
    CHECK(zero.error()["error"]["code"] == "degenerate_exponent");
    CHECK(zero.out.empty());

    CHECK(run({"spectrum", "--m", "3", "--k", "1"}).error()["error"]["code"] == "gcd_2k1_2m1");
    CHECK(run({"spectrum", "--n", "4"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "--n", "4", "--d", "3", "--m", "2", "--k", "1"}).code ==
          cli::kExitUsage);
    CHECK(run({"spectrum", "--n", "4", "--d", "3", "--modulus", "0x15"}).error()["error"]["code"] ==
          "reducible_modulus");
    CHECK(run({"spectrum", "--n", "4", "--d", "3", "--modulus", "zz"}).error()["error"]["code"] ==
          "bad_hex");
    CHECK(run({"spectrum", "--n", "4", "--d", "3", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"spectrum", "--bogus"}).error()["error"]["code"] == "usage");
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"survey", "--help"}).code == cli::kExitOk);
}

TEST_CASE("relaxed Niho mode has no prediction") {
    const Run r = run({"spectrum", "--m", "4", "--k", "2", "--relaxed"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.json()["locally_apn"] == false);
    CHECK(r.json()["prediction"].is_null());
}

TEST_CASE("survey subcommand") {
    const Run m2 = run({"survey", "--m", "2"});
    CHECK(m2.code == cli::kExitOk);
    CHECK(m2.json()["reports"][0]["covered"] == true);
    const Run m4 = run({"survey", "--m", "4", "--format", "table"});
    CHECK(m4.code == cli::kExitOk);
    CHECK(m4.out.find("covered=true") != std::string::npos);
    CHECK(run({"survey", "--m", "11"}).error()["error"]["code"] == "m_out_of_range");
    CHECK(run({"survey", "--m", "9"}).error()["error"]["code"] == "extended_required");
    const Run csv = run({"survey", "--m", "2", "--format", "csv"});
    CHECK(csv.out.rfind("s,d,delta,locally_apn,in_theorem_orbit\n", 0) == 0);
}

TEST_CASE("survey --out writes JSON, CSV per m and a manifest") {
    const fs::path dir = scratch_dir("survey");
    const fs::path out = dir / "survey.json";
    const Run r = run({"survey", "--m", "2", "--max-m", "3", "--out", out.string()});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find("survey m=3 covered=true") != std::string::npos);
    const Json j = Json::parse(slurp(out));
    CHECK(j["all_covered"] == true);
    CHECK(j["reports"].size() == 2);
    CHECK(fs::exists(dir / "survey_m2.csv"));
    CHECK(fs::exists(dir / "survey_m3.csv"));
    const Json man = Json::parse(slurp(out.string() + ".manifest.json"));
    CHECK(man["field_moduli_used"]["4"] == "0x13");
    CHECK(man["field_moduli_used"]["6"] == "0x43");
    CHECK(man["wall_clock"].get<double>() >= 0.0);
}

TEST_CASE("lemmas subcommand") {
    const Run r = run({"lemmas", "--only", "lemma4", "--samples", "3"});
    REQUIRE(r.code == cli::kExitOk);
    for (const auto& t : r.json()["tallies"]) {
        CHECK(t["lemma"] == "lemma4");
        CHECK(t["passes"] == 3);
    }
    const Run zero = run({"lemmas", "--samples", "0", "--only", "lemma5"});
    CHECK(zero.code == cli::kExitOk);
    CHECK(zero.err.find("warning") != std::string::npos);
    CHECK(zero.json()["vacuous"] == true);
    CHECK(run({"lemmas", "--only", "lemma9"}).code == cli::kExitUsage);
    CHECK(run({"lemmas", "--samples", "-1"}).code == cli::kExitUsage);

    const Run a = run({"lemmas", "--seed", "5", "--samples", "300", "--only", "lemma5"});
    const Run b = run({"lemmas", "--seed", "5", "--samples", "300", "--only", "lemma5"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("verify subcommand") {
    const Run r = run({"verify", "--max-m", "4"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.json()["all_match"] == true);
    CHECK(r.json()["results"].size() == 8);
    const Run one = run({"verify", "--m", "5", "--k", "2", "--format", "csv"});
    CHECK(one.code == cli::kExitOk);
    const NihoParams p = build_niho(5, 2);
    CHECK(one.out == "m,k,s,d,match_ds,match_bs\n5,2," + std::to_string(p.s) + "," +
                         std::to_string(p.d) + ",1,1\n");
    const Run r4 = run({"verify", "--non-coprime", "--max-m", "4"});
    CHECK(r4.code == cli::kExitOk);
    CHECK(r4.json()["none_locally_apn"] == true);
    CHECK(run({"verify", "--max-m", "11"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--min-m", "2", "--max-m", "3", "--modulus", "0x13"}).code ==
          cli::kExitUsage);
}

TEST_CASE("reports are byte-identical across thread counts") {
    const fs::path dir = scratch_dir("jobs");
    const auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
    REQUIRE(run({"spectrum", "--m", "5", "--k", "2", "--jobs", "1", "--out", a}).code == 0);
    REQUIRE(run({"spectrum", "--m", "5", "--k", "2", "--jobs", "4", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(fs::exists(a + ".manifest.json"));
    const Json man = Json::parse(slurp(a + ".manifest.json"));
    CHECK(man["field_moduli_used"]["10"] == "0x409");
    CHECK(man["command_line"].get<std::string>().find("--jobs 1") != std::string::npos);
}

TEST_CASE("JSON round trips") {
    round_trip(verify_theorems(3, 2));
    round_trip(survey_niho(3));
    SurveyOptions o;
    o.cyclotomic_shifts = true;
    round_trip(survey_niho(2, o));
    round_trip(remark4_instances(4).front());
    LemmaSuiteOptions lo;
    lo.samples = 20;
    lo.n = 4;
    round_trip(run_lemma_suite(lo));

    SpectrumReport sr;
    sr.n = 6;
    sr.modulus = 0x43;
    sr.d = 15;
    sr.diff = predicted_diff_spectrum(3);
    sr.boom = predicted_boom_spectrum(3);
    sr.locally_apn = true;
    sr.niho = build_niho(3, 2);
    round_trip(sr);
    sr.prediction = verify_theorems(3, 2);
    round_trip(sr);

    RunManifest m{"0.1.0", {{4, 0x13}, {10, 0x409}}, 9, "nihoapn survey --m 2", 1.5};
    round_trip(m);
}

TEST_CASE("hex helpers") {
    CHECK(to_hex(0x11b) == "0x11b");
    CHECK(parse_hex("0x11B") == 0x11b);
    CHECK(parse_hex("13") == 0x13);
    CHECK_THROWS(parse_hex(""));
    CHECK_THROWS(parse_hex("0x"));
    CHECK_THROWS(parse_hex("0xg1"));
}

}  // TEST_SUITE
