#include "nihoapn/gf2_poly.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace nihoapn::gf2poly {

namespace {

// Lexicographically (numerically) smallest irreducible of each degree.
constexpr std::array<Poly, kMaxDegree + 1> kDefaultModuli = {
    0x0,        0x0,        0x7,        0xb,        0x13,       0x25,
    0x43,       0x83,       0x11b,      0x203,      0x409,      0x805,
    0x1009,     0x201b,     0x4021,     0x8003,     0x1002b,    0x20009,
    0x40009,    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,
    0x100001b,  0x2000009,  0x400001b,  0x8000027,  0x10000003, 0x20000005,
    0x40000003,
};

}  // namespace

int degree(Poly p) noexcept {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

Poly mod(Poly a, Poly f) noexcept {
    const int df = degree(f);
    for (int da = degree(a); da >= df; da = degree(a)) {
        a ^= f << (da - df);
    }
    return a;
}

Poly mulmod(Poly a, Poly b, Poly f) noexcept {
    const int df = degree(f);
    const Poly top = Poly{1} << df;
    Poly acc = 0;
    while (b != 0) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= f;
    }
    return acc;
}

Poly gcd(Poly a, Poly b) noexcept {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::optional<int> smallest_factor_degree(Poly f) noexcept {
    const int n = degree(f);
    if (n <= 1) return std::nullopt;
    const Poly x = 0b10;
    Poly frob = x;  // x^(2^i) mod f
    for (int i = 1; i <= n / 2; ++i) {
        frob = mulmod(frob, frob, f);
        if (degree(gcd(f, frob ^ x)) > 0) return i;
    }
    return std::nullopt;
}

Poly smallest_irreducible(int n) {
    if (n < 1 || n > 31) {
        throw std::out_of_range("smallest_irreducible: degree " + std::to_string(n));
    }
    for (Poly f = (Poly{1} << n) | 1;; f += 2) {
        if (is_irreducible(f)) return f;
    }
}

Poly default_modulus(int n) {
    if (n < kMinDegree || n > kMaxDegree) {
        throw std::out_of_range("default_modulus: degree " + std::to_string(n));
    }
    return kDefaultModuli[static_cast<std::size_t>(n)];
}

}  // namespace nihoapn::gf2poly
