#pragma once

// Binary extension fields GF(2^n), 2 <= n <= 30, in the polynomial basis.
//
// For even n = 2m the field also exposes its subfield GF(2^m), the
// conjugation x -> x^(2^m), the unit circle {v : v^(2^m+1) = 1} and the
// polar decomposition x = u*v with u in GF(2^m)* and v on the unit circle.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace nihoapn {

// Field element: bit i holds the coefficient of x^i. Addition needs no
// field context; everything else goes through Field.
struct Elt {
    std::uint32_t bits = 0;

    friend constexpr bool operator==(Elt, Elt) = default;
    friend constexpr auto operator<=>(Elt, Elt) = default;

    friend constexpr Elt operator+(Elt a, Elt b) noexcept { return Elt{a.bits ^ b.bits}; }
    constexpr Elt& operator+=(Elt o) noexcept {
        bits ^= o.bits;
        return *this;
    }
    constexpr bool is_zero() const noexcept { return bits == 0; }
};

struct Polar {
    Elt u;  // in GF(2^m)*
    Elt v;  // on the unit circle
};

// Discrete log / antilog tables with respect to Field::generator().
struct LogTables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, 2^n - 2]
    std::vector<std::uint32_t> log;  // log[x] for x != 0; log[0] unused
};

class Field {
public:
    // Largest degree for which log/antilog tables are built at construction.
    static constexpr int kTableMaxDegree = 22;

    // make_field: `modulus` must be monic of degree n and irreducible;
    // when absent the built-in smallest irreducible of degree n is used.
    static Field make(int n, std::optional<std::uint64_t> modulus = std::nullopt);

    int degree() const noexcept { return n_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    // m = n/2 for even n.
    std::optional<int> subfield_degree() const noexcept {
        return n_ % 2 == 0 ? std::optional<int>(n_ / 2) : std::nullopt;
    }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
    // |GF(2^n)*| = 2^n - 1.
    std::uint64_t group_order() const noexcept { return size() - 1; }

    bool contains(Elt a) const noexcept { return a.bits < size(); }
    // Validating constructor for raw input.
    Elt element(std::uint64_t bits) const;

    static constexpr Elt zero() noexcept { return Elt{0}; }
    static constexpr Elt one() noexcept { return Elt{1}; }

    Elt add(Elt a, Elt b) const noexcept { return a + b; }
    Elt mul(Elt a, Elt b) const noexcept;
    Elt square(Elt a) const noexcept { return mul(a, a); }
    // a^e; for a != 0 the exponent is reduced modulo 2^n - 1. 0^0 = 1.
    Elt pow(Elt a, std::uint64_t e) const noexcept;
    // a^(2^i), i >= 0.
    Elt frobenius(Elt a, int i) const noexcept;
    // Throws DomainError for a = 0.
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    // Absolute trace Tr_1^n, always 0 or 1.
    int trace_abs(Elt a) const noexcept;

    // ---- even n only (DomainError otherwise) ----

    // x -> x^(2^m).
    Elt conjugate(Elt a) const;
    bool in_subfield(Elt a) const;
    // Tr_1^m(a) for a in GF(2^m); DomainError when a is not in the subfield.
    int subfield_trace(Elt a) const;
    // Square root inside GF(2^m): y -> y^(2^(m-1)).
    Elt subfield_sqrt(Elt y) const;
    // v * conj(v) = 1; false for 0.
    bool in_unit_circle(Elt v) const;
    // Unique a = u*v with u in GF(2^m)*, v on the unit circle.
    Polar polar_decompose(Elt a) const;

    // A primitive element, found by search at construction.
    Elt generator() const noexcept { return generator_; }
    // Null when n > kTableMaxDegree.
    const LogTables* log_tables() const noexcept { return tables_.get(); }

    // All 2^m + 1 unit-circle elements, generated as powers of g^(2^m - 1),
    // starting with 1.
    std::vector<Elt> unit_circle() const;
    // All 2^m subfield elements, sorted.
    std::vector<Elt> subfield_elements() const;

private:
    Field(int n, std::uint64_t modulus);
    void require_even(const char* op) const;

    int n_;
    std::uint64_t modulus_;
    Elt generator_;
    std::shared_ptr<const LogTables> tables_;
};

inline Field make_field(int n, std::optional<std::uint64_t> modulus = std::nullopt) {
    return Field::make(n, modulus);
}

// Distinct prime factors of v (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace nihoapn
