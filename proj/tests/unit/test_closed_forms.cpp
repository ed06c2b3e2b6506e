#include <doctest.h>

#include "nihoapn/closed_forms.hpp"
#include "nihoapn/errors.hpp"
#include "nihoapn/niho.hpp"

using namespace nihoapn;
using u64 = std::uint64_t;

namespace {
Histogram hist(std::initializer_list<std::pair<const u64, u64>> il) { return Histogram(il); }
}  // namespace

TEST_SUITE("closed_forms") {

TEST_CASE("predicted differential spectrum examples") {
    CHECK(predicted_diff_spectrum(2).omega == hist({{0, 9}, {2, 6}, {4, 1}}));
    CHECK(predicted_diff_spectrum(3).omega == hist({{0, 35}, {2, 28}, {8, 1}}));
    CHECK(predicted_diff_spectrum(5).omega == hist({{0, 527}, {2, 496}, {32, 1}}));
    CHECK(predicted_diff_spectrum(5).delta == 32);
}

TEST_CASE("predicted boomerang spectrum examples") {
    CHECK(predicted_boom_spectrum(3).nu == hist({{0, 32}, {2, 24}, {8, 4}, {10, 3}}));
    CHECK(predicted_boom_spectrum(2).nu == hist({{0, 8}, {2, 4}, {4, 1}, {6, 2}}));
    CHECK(predicted_boom_spectrum(4).nu == hist({{0, 128}, {2, 112}, {16, 7}, {18, 8}}));
    CHECK(predicted_boom_spectrum(4).beta == 18);
}

TEST_CASE("predicted spectra satisfy the counting identities") {
    for (int m = 2; m <= 15; ++m) {
        const u64 q2 = u64{1} << (2 * m);
        const auto ds = predicted_diff_spectrum(m);
        u64 count = 0, weighted = 0;
        for (auto [i, w] : ds.omega) {
            count += w;
            weighted += i * w;
        }
        CHECK(count == q2);
        CHECK(weighted == q2);
        u64 total = 0;
        for (auto [i, v] : predicted_boom_spectrum(m).nu) total += v;
        CHECK(total == q2 - 1);
    }
}

TEST_CASE("trace criterion for DDT value 2 on the subfield") {
    for (int m = 2; m <= 8; ++m) {
        const Field f = make_field(2 * m);
        for (const NihoParams& p : theorem_parameters(m)) {
            const auto row = ddt_row(PowerFunction(f, p.d));
            u64 passing = 0;
            for (Elt b : f.subfield_elements()) {
                if (b.bits <= 1) continue;
                const bool crit = ddt2_trace_criterion(f, b);
                REQUIRE(crit == (row[b.bits] == 2));
                passing += crit;
            }
            CHECK(passing == (m % 2 == 0 ? u64{1} << (m - 1) : (u64{1} << (m - 1)) - 1));
        }
    }
    const Field f = make_field(4);
    const Elt w = f.pow(Elt{2}, 5);
    CHECK(ddt2_trace_criterion(f, w));
    CHECK(ddt2_trace_criterion(f, f.square(w)));
    CHECK_THROWS_AS(ddt2_trace_criterion(f, Field::one()), DomainError);
    CHECK_THROWS_AS(ddt2_trace_criterion(f, Field::zero()), DomainError);
    CHECK_THROWS_AS(ddt2_trace_criterion(f, Elt{2}), DomainError);
}

TEST_CASE("verify_theorems examples") {
    for (auto [m, k] : {std::pair{2, 1}, {3, 2}, {5, 2}}) {
        const PredictionReport r = verify_theorems(m, k);
        CHECK(r.match_ds);
        CHECK(r.match_bs);
        CHECK(r.params == build_niho(m, k));
    }
    CHECK_THROWS_AS(verify_theorems(3, 1), ParamError);
    CHECK_THROWS_AS(verify_theorems(11, 2), ParamError);
}

TEST_CASE("DDT peak at b = 1 and BCT support for every valid (m, k), m <= 6") {
    for (int m = 2; m <= 6; ++m) {
        const Field f = make_field(2 * m);
        const u64 q = u64{1} << m;
        for (const NihoParams& p : theorem_parameters(m)) {
            const PowerFunction F(f, p.d);
            const auto row = ddt_row(F);
            const auto bct = bct_fiber(F);
            for (u64 b = 0; b < f.size(); ++b) {
                REQUIRE((row[b] == q) == (b == 1));
                if (b == 0) continue;
                const bool sub = f.in_subfield(Elt{uint32_t(b)});
                const bool omega2 = row[b] == 2;
                REQUIRE(bct[b] == predicted_bct_value(m, sub, omega2));
            }
        }
    }
}

TEST_CASE("pointwise BCT value table") {
    CHECK(predicted_bct_value(3, true, true) == 10);
    CHECK(predicted_bct_value(3, true, false) == 8);
    CHECK(predicted_bct_value(3, false, true) == 2);
    CHECK(predicted_bct_value(3, false, false) == 0);
}

}  // TEST_SUITE
