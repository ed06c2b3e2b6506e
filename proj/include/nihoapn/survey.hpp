#pragma once

// Exhaustive sweeps over normalized Niho exponents s(2^m-1)+1, 1 <= s <= 2^m.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "nihoapn/niho.hpp"
#include "nihoapn/spectra.hpp"

namespace nihoapn {

struct SurveyRow {
    std::uint64_t s = 0;
    std::uint64_t d = 0;
    std::uint64_t delta = 0;
    bool locally_apn = false;
    bool in_theorem_orbit = false;
    // s = 1 gives the linear x^(2^m); it is listed but not classified.
    bool excluded = false;
    DiffSpectrum spectrum;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

struct SurveyReport {
    int m = 0;
    std::vector<SurveyRow> rows;  // sorted by s
    std::set<std::uint64_t> locally_apn_s;
    std::set<std::uint64_t> theorem_orbit_s;
    std::set<std::uint64_t> excluded_s;
    // Locally-APN exponents outside the theorem orbits, and the reverse.
    std::set<std::uint64_t> uncovered_s;
    std::set<std::uint64_t> missing_s;
    bool covered = false;
    // Every orbit shares one differential spectrum.
    bool orbit_spectra_consistent = false;
    // Set when cyclotomic shifts d * 2^i were swept; true iff none changed
    // the spectrum.
    std::optional<bool> cyclotomic_shifts_consistent;
    double seconds = 0.0;

    // Equality ignores timing.
    friend bool operator==(const SurveyReport& a, const SurveyReport& b) {
        return a.m == b.m && a.rows == b.rows && a.locally_apn_s == b.locally_apn_s &&
               a.theorem_orbit_s == b.theorem_orbit_s && a.excluded_s == b.excluded_s &&
               a.uncovered_s == b.uncovered_s && a.missing_s == b.missing_s &&
               a.covered == b.covered && a.orbit_spectra_consistent == b.orbit_spectra_consistent &&
               a.cyclotomic_shifts_consistent == b.cyclotomic_shifts_consistent;
    }
};

struct SurveyOptions {
    unsigned jobs = 1;
    bool cyclotomic_shifts = false;
};

inline constexpr int kSurveyMaxM = 10;
// Default sweeps stop here; larger m must be requested explicitly.
inline constexpr int kSurveyDefaultMaxM = 8;

// 2 <= m <= kSurveyMaxM.
SurveyReport survey_niho(int m, const SurveyOptions& opts = {});

struct Remark4Instance {
    int m = 0;
    int k = 0;
    std::uint64_t s = 0;
    std::uint64_t d = 0;
    std::uint64_t delta = 0;
    bool locally_apn = false;

    friend bool operator==(const Remark4Instance&, const Remark4Instance&) = default;
};

// All (m, k), 2 <= m <= limit_m, 1 <= k < 2m, with gcd(2^k+1, 2^m+1) = 1 and
// gcd(k, m) > 1, classified by brute force. limit_m <= 8.
std::vector<Remark4Instance> remark4_instances(int limit_m, unsigned jobs = 1);

// Classification of a single (m, k) outside the gcd(k, m) = 1 hypothesis.
Remark4Instance classify_relaxed(int m, int k, unsigned jobs = 1);

}  // namespace nihoapn
