#pragma once

// Closed-form differential and boomerang spectra of the Niho family
// x^(s(2^m-1)+1), s = (2^k+1)^(-1) mod (2^m+1), gcd(k, m) = 1, and their
// comparison against brute force.

#include <cstdint>
#include <optional>
#include <span>

#include "nihoapn/field.hpp"
#include "nihoapn/niho.hpp"
#include "nihoapn/spectra.hpp"

namespace nihoapn {

// {0: 2^(2m-1) + 2^(m-1) - 1, 2: 2^(2m-1) - 2^(m-1), 2^m: 1}.
DiffSpectrum predicted_diff_spectrum(int m);

// {0: 2^(2m-1), 2: 2^(2m-1) - 2^m, 2^m: A, 2^m + 2: B} with
// (A, B) = (2^(m-1), 2^(m-1) - 1) for odd m and swapped for even m.
BoomSpectrum predicted_boom_spectrum(int m);

// Tr_1^m(1 / (b + 1)) = 1 for b in GF(2^m) \ GF(2). For the Niho family
// this holds exactly when DDT(1, b) = 2.
bool ddt2_trace_criterion(const Field& field, Elt b);

// Predicted BCT(1, b), b != 0, from subfield membership of b and whether
// DDT(1, b) = 2.
std::uint64_t predicted_bct_value(int m, bool in_subfield, bool in_omega2) noexcept;

struct PredictionReport {
    NihoParams params;
    std::uint64_t modulus = 0;
    DiffSpectrum predicted_ds;
    DiffSpectrum actual_ds;
    BoomSpectrum predicted_bs;
    BoomSpectrum actual_bs;
    bool match_ds = false;
    bool match_bs = false;

    friend bool operator==(const PredictionReport&, const PredictionReport&) = default;
};

// Largest m for which verify_theorems brute-forces GF(2^(2m)).
inline constexpr int kVerifyMaxM = 10;

PredictionReport verify_theorems(int m, int k, unsigned jobs = 1,
                                 std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace nihoapn
