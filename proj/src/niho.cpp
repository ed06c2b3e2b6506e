#include "nihoapn/niho.hpp"

#include <map>
#include <numeric>
#include <string>

#include "nihoapn/errors.hpp"

namespace nihoapn {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 circle_order(int m) { return (u64{1} << m) + 1; }

void check_m(int m) {
    if (m < 2 || m > 31) {
        throw ParamError("m_out_of_range", "m = " + std::to_string(m) + " outside [2, 31]");
    }
}

void check_k(int k) {
    if (k < 1) throw ParamError("k_out_of_range", "k = " + std::to_string(k) + " must be >= 1");
}

NihoParams make_params(int m, int k) {
    const u64 mod = circle_order(m);
    const u64 g = gcd_pow2_plus1(m, k);
    if (g != 1) {
        throw NotCoprime("gcd_2k1_2m1",
                         "gcd(2^" + std::to_string(k) + "+1, 2^" + std::to_string(m) +
                             "+1) = " + std::to_string(g) + " != 1",
                         g);
    }
    const u64 s = inv_mod((pow2_mod(static_cast<u64>(k), mod) + 1) % mod, mod);
    return NihoParams{m, k, s, niho_exponent(m, s)};
}

}  // namespace

int NihoParams::canonical_k() const noexcept {
    const int r = k % (2 * m);
    return r == 0 ? 2 * m : r;
}

u64 inv_mod(u64 a, u64 modulus) {
    if (modulus < 2) throw ParamError("modulus_out_of_range", "inv_mod: modulus must be >= 2");
    i64 r0 = static_cast<i64>(modulus), r1 = static_cast<i64>(a % modulus);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) {
        const u64 g = static_cast<u64>(r0);
        throw NotCoprime("not_coprime",
                         "inv_mod: gcd(" + std::to_string(a) + ", " + std::to_string(modulus) +
                             ") = " + std::to_string(g),
                         g);
    }
    const i64 m = static_cast<i64>(modulus);
    return static_cast<u64>(((t0 % m) + m) % m);
}

u64 pow2_mod(u64 e, u64 modulus) noexcept {
    u64 acc = 1 % modulus, base = 2 % modulus;
    while (e != 0) {
        if (e & 1) acc = acc * base % modulus;
        base = base * base % modulus;
        e >>= 1;
    }
    return acc;
}

u64 gcd_pow2_plus1(int m, int k) noexcept {
    const u64 mod = circle_order(m);
    return std::gcd((pow2_mod(static_cast<u64>(k), mod) + 1) % mod, mod);
}

u64 niho_exponent(int m, u64 s) noexcept { return s * ((u64{1} << m) - 1) + 1; }

NihoParams build_niho(int m, int k) {
    check_m(m);
    check_k(k);
    if (const int g = std::gcd(k, m); g != 1) {
        throw NotCoprime("gcd_k_m",
                         "gcd(k, m) = gcd(" + std::to_string(k) + ", " + std::to_string(m) +
                             ") = " + std::to_string(g) + " != 1",
                         static_cast<u64>(g));
    }
    return make_params(m, k);
}

NihoParams build_niho_relaxed(int m, int k) {
    check_m(m);
    check_k(k);
    return make_params(m, k);
}

bool satisfies_hypotheses(int m, int k) noexcept {
    return m >= 2 && m <= 31 && k >= 1 && std::gcd(k, m) == 1 && gcd_pow2_plus1(m, k) == 1;
}

bool gcd_criterion(int m, int k) noexcept {
    const int g = std::gcd(k, m);
    return (m / g) % 2 == 0 || (k / g) % 2 == 0;
}

std::set<u64> exponent_orbit(u64 s, int m) {
    check_m(m);
    const u64 mod = circle_order(m);
    if (s < 2 || s > mod - 1) {
        throw ParamError("s_out_of_range",
                         "exponent_orbit: s = " + std::to_string(s) + " outside [2, 2^m]");
    }
    std::set<u64> out{s, (mod + 1 - s) % mod};
    const u64 two_s_minus_1 = (2 * s - 1) % mod;
    if (std::gcd(two_s_minus_1, mod) == 1) {
        const u64 w = inv_mod(two_s_minus_1, mod);
        out.insert(s * w % mod);
        out.insert((s - 1) * w % mod);
    }
    return out;
}

bool is_permutation_exponent(const NihoParams& p) noexcept {
    const u64 mod = circle_order(p.m);
    return std::gcd((2 * p.s - 1) % mod, mod) == 1;
}

std::vector<NihoParams> theorem_parameters(int m) {
    check_m(m);
    std::map<u64, NihoParams> by_s;
    for (int k = 1; k <= 2 * m; ++k) {
        if (!satisfies_hypotheses(m, k)) continue;
        const NihoParams p = make_params(m, k);
        by_s.emplace(p.s, p);
    }
    std::vector<NihoParams> out;
    for (auto& [s, p] : by_s) out.push_back(p);
    return out;
}

}  // namespace nihoapn
