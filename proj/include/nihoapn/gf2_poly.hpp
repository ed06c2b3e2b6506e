#pragma once

// Arithmetic on polynomials over GF(2) packed into machine words
// (bit i = coefficient of x^i). Only what field construction needs.

#include <cstdint>
#include <optional>

namespace nihoapn::gf2poly {

using Poly = std::uint64_t;

// Degree of p; -1 for the zero polynomial.
int degree(Poly p) noexcept;

Poly mod(Poly a, Poly f) noexcept;

// a*b mod f, with deg a, deg b < deg f <= 31.
Poly mulmod(Poly a, Poly b, Poly f) noexcept;

Poly gcd(Poly a, Poly b) noexcept;

// Degree of the smallest irreducible factor of f, or nullopt when f is
// irreducible. deg f must lie in [1, 31].
//
// Ben-Or style: the first i for which gcd(x^(2^i) - x, f) != 1 is exactly
// the smallest degree of an irreducible factor of f.
std::optional<int> smallest_factor_degree(Poly f) noexcept;

inline bool is_irreducible(Poly f) noexcept {
    return degree(f) >= 1 && !smallest_factor_degree(f).has_value();
}

// Numerically smallest monic irreducible polynomial of degree n (search).
Poly smallest_irreducible(int n);

// Built-in default modulus for 2 <= n <= 30. Same values as
// smallest_irreducible(n), stored so field construction does not search.
Poly default_modulus(int n);

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 30;

}  // namespace nihoapn::gf2poly
