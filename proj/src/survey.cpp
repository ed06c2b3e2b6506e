#include "nihoapn/survey.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "nihoapn/errors.hpp"
#include "nihoapn/field.hpp"
#include "parallel.hpp"

namespace nihoapn {

namespace {

using u64 = std::uint64_t;

}  // namespace

SurveyReport survey_niho(int m, const SurveyOptions& opts) {
    if (m < 2 || m > kSurveyMaxM) {
        throw ParamError("m_out_of_range", "survey: m = " + std::to_string(m) + " outside [2, " +
                                               std::to_string(kSurveyMaxM) + "]");
    }
    const auto start = std::chrono::steady_clock::now();
    const Field field = make_field(2 * m);
    const u64 q = u64{1} << m;

    SurveyReport rep;
    rep.m = m;
    for (const NihoParams& p : theorem_parameters(m)) {
        const auto orbit = exponent_orbit(p.s, m);
        rep.theorem_orbit_s.insert(orbit.begin(), orbit.end());
    }

    rep.rows.resize(q);
    std::vector<char> shifts_ok(q, 1);
    const unsigned workers = detail::resolve_jobs(opts.jobs, q);
    detail::for_each_chunk(q, workers, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SurveyRow& row = rep.rows[i];
            row.s = i + 1;
            row.d = niho_exponent(m, row.s);
            const PowerFunction f(field, row.d);
            const auto ddt = ddt_row(f);
            row.spectrum = diff_spectrum_from_row(ddt);
            row.delta = row.spectrum.delta;
            row.excluded = row.s == 1;
            row.locally_apn = !row.excluded && is_locally_apn_row(ddt);
            if (opts.cyclotomic_shifts) {
                u64 d = row.d;
                for (int shift = 1; shift < 2 * m; ++shift) {
                    d = (2 * d) % field.group_order();
                    if (diff_spectrum(PowerFunction(field, d)) != row.spectrum) shifts_ok[i] = 0;
                }
            }
        }
    });

    for (SurveyRow& row : rep.rows) {
        row.in_theorem_orbit = rep.theorem_orbit_s.contains(row.s);
        if (row.excluded) rep.excluded_s.insert(row.s);
        if (row.locally_apn) rep.locally_apn_s.insert(row.s);
        if (row.locally_apn && !row.in_theorem_orbit) rep.uncovered_s.insert(row.s);
        if (!row.locally_apn && row.in_theorem_orbit) rep.missing_s.insert(row.s);
    }
    rep.covered = rep.locally_apn_s == rep.theorem_orbit_s;

    rep.orbit_spectra_consistent = true;
    for (u64 s = 2; s <= q; ++s) {
        for (u64 t : exponent_orbit(s, m)) {
            if (rep.rows[t - 1].spectrum != rep.rows[s - 1].spectrum) {
                rep.orbit_spectra_consistent = false;
            }
        }
    }
    if (opts.cyclotomic_shifts) {
        rep.cyclotomic_shifts_consistent =
            std::all_of(shifts_ok.begin(), shifts_ok.end(), [](char ok) { return ok != 0; });
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

Remark4Instance classify_relaxed(int m, int k, unsigned jobs) {
    const NihoParams p = build_niho_relaxed(m, k);
    const PowerFunction f(make_field(2 * m), p.d);
    const auto ddt = ddt_row(f, jobs);
    return Remark4Instance{m, k, p.s, p.d, diff_spectrum_from_row(ddt).delta,
                           is_locally_apn_row(ddt)};
}

std::vector<Remark4Instance> remark4_instances(int limit_m, unsigned jobs) {
    if (limit_m > 8) {
        throw ParamError("m_out_of_range",
                         "remark4_instances: limit_m = " + std::to_string(limit_m) + " exceeds 8");
    }
    std::vector<Remark4Instance> out;
    for (int m = 2; m <= limit_m; ++m) {
        for (int k = 1; k < 2 * m; ++k) {
            if (std::gcd(k, m) == 1 || gcd_pow2_plus1(m, k) != 1) continue;
            out.push_back(classify_relaxed(m, k, jobs));
        }
    }
    return out;
}

}  // namespace nihoapn
