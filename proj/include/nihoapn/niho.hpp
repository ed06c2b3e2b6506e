#pragma once

// Parameters of the Niho family x^(s(2^m-1)+1) over GF(2^(2m)) with
// s = (2^k+1)^(-1) mod (2^m+1), and the exponent equivalences that preserve
// the differential spectrum.

#include <cstdint>
#include <set>
#include <vector>

namespace nihoapn {

struct NihoParams {
    int m = 0;
    int k = 0;            // as supplied; see canonical_k()
    std::uint64_t s = 0;  // representative in [1, 2^m]
    std::uint64_t d = 0;  // s(2^m - 1) + 1

    // k mod 2m, in [1, 2m]; 2^k mod (2^m+1) only depends on this.
    int canonical_k() const noexcept;

    friend bool operator==(const NihoParams&, const NihoParams&) = default;
};

// Inverse of a modulo `modulus` in [1, modulus-1] (extended Euclid).
// Throws NotCoprime (carrying the gcd) when gcd(a, modulus) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t modulus);

// 2^e mod modulus, for 1 <= modulus < 2^32.
std::uint64_t pow2_mod(std::uint64_t e, std::uint64_t modulus) noexcept;

// gcd(2^k + 1, 2^m + 1) by integer arithmetic (no overflow for any k).
std::uint64_t gcd_pow2_plus1(int m, int k) noexcept;

// s(2^m - 1) + 1.
std::uint64_t niho_exponent(int m, std::uint64_t s) noexcept;

// Full hypotheses: gcd(k, m) = 1 and gcd(2^k+1, 2^m+1) = 1.
// Throws ParamError / NotCoprime naming the failed condition. 2 <= m <= 31.
NihoParams build_niho(int m, int k);

// Only requires 2^k+1 to be invertible modulo 2^m+1; gcd(k, m) may exceed 1.
NihoParams build_niho_relaxed(int m, int k);

// True when both hypotheses of build_niho hold.
bool satisfies_hypotheses(int m, int k) noexcept;

// gcd(2^k+1, 2^m+1) = 1 decided by the parity rule: one of m/g, k/g is
// even, g = gcd(k, m).
bool gcd_criterion(int m, int k) noexcept;

// {s, 1-s} mod (2^m+1), plus {s/(2s-1), (s-1)/(2s-1)} when 2s-1 is
// invertible. Requires 2 <= s <= 2^m.
std::set<std::uint64_t> exponent_orbit(std::uint64_t s, int m);

// gcd(2s-1, 2^m+1) = 1.
bool is_permutation_exponent(const NihoParams& p) noexcept;

// One NihoParams per distinct s over k in [1, 2m] meeting the hypotheses,
// sorted by s (smallest k kept for each s).
std::vector<NihoParams> theorem_parameters(int m);

}  // namespace nihoapn
