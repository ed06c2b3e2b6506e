#include "nihoapn/closed_forms.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "nihoapn/errors.hpp"

namespace nihoapn {

namespace {

using u64 = std::uint64_t;

void check_m(int m, int hi) {
    if (m < 2 || m > hi) {
        throw ParamError("m_out_of_range", "m = " + std::to_string(m) + " outside [2, " +
                                               std::to_string(hi) + "]");
    }
}

// Offsets from 2^(m-1) of the frequencies of BCT values 2^m and 2^m + 2,
// indexed by m % 2. The parity of m only swaps which of the two loses one.
struct BoomTemplate {
    int top_minus_2_offset;  // nu_{2^m}
    int top_offset;          // nu_{2^m + 2}
};
constexpr std::array<BoomTemplate, 2> kBoomTemplates = {{
    {-1, 0},  // m even
    {0, -1},  // m odd
}};

}  // namespace

DiffSpectrum predicted_diff_spectrum(int m) {
    check_m(m, 31);
    const u64 q = u64{1} << m;
    const u64 half_n = u64{1} << (2 * m - 1);
    const u64 half_m = q / 2;
    Histogram h{{0, half_n + half_m - 1}, {2, half_n - half_m}, {q, 1}};
    u64 total = 0, weighted = 0;
    for (auto [i, w] : h) {
        total += w;
        weighted += i * w;
    }
    if (total != q * q || weighted != q * q) {
        throw std::logic_error("predicted differential spectrum violates the counting identities");
    }
    return make_diff_spectrum(std::move(h));
}

BoomSpectrum predicted_boom_spectrum(int m) {
    check_m(m, 31);
    const u64 q = u64{1} << m;
    const u64 half_n = u64{1} << (2 * m - 1);
    const u64 half_m = q / 2;
    const BoomTemplate& t = kBoomTemplates[static_cast<std::size_t>(m % 2)];
    Histogram h{{0, half_n},
                {2, half_n - q},
                {q, half_m + t.top_minus_2_offset},
                {q + 2, half_m + t.top_offset}};
    u64 total = 0;
    for (auto [i, w] : h) total += w;
    if (total != q * q - 1) {
        throw std::logic_error("predicted boomerang spectrum does not sum to 2^(2m) - 1");
    }
    return make_boom_spectrum(std::move(h));
}

bool ddt2_trace_criterion(const Field& field, Elt b) {
    if (!field.in_subfield(b)) throw DomainError("ddt2_trace_criterion: b not in GF(2^m)");
    if (b == Field::zero() || b == Field::one()) {
        throw DomainError("ddt2_trace_criterion: b must lie outside GF(2)");
    }
    return field.subfield_trace(field.inv(b + Field::one())) == 1;
}

u64 predicted_bct_value(int m, bool in_subfield, bool in_omega2) noexcept {
    const u64 q = u64{1} << m;
    if (in_subfield) return in_omega2 ? q + 2 : q;
    return in_omega2 ? 2 : 0;
}

PredictionReport verify_theorems(int m, int k, unsigned jobs, std::optional<u64> modulus) {
    const NihoParams params = build_niho(m, k);
    check_m(m, kVerifyMaxM);
    const Field field = make_field(2 * m, modulus);
    const PowerFunction f(field, params.d);

    PredictionReport r;
    r.params = params;
    r.modulus = field.modulus();
    r.predicted_ds = predicted_diff_spectrum(m);
    r.predicted_bs = predicted_boom_spectrum(m);
    r.actual_ds = diff_spectrum(f, jobs);
    r.actual_bs = boom_spectrum(f, jobs);
    r.match_ds = r.actual_ds == r.predicted_ds;
    r.match_bs = r.actual_bs == r.predicted_bs;
    return r;
}

}  // namespace nihoapn
