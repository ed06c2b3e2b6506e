#include "nihoapn/field.hpp"

#include <algorithm>
#include <string>

#include "nihoapn/errors.hpp"
#include "nihoapn/gf2_poly.hpp"

namespace nihoapn {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

Field Field::make(int n, std::optional<std::uint64_t> modulus) {
    if (n < gf2poly::kMinDegree || n > gf2poly::kMaxDegree) {
        throw ParamError("degree_out_of_range",
                         "field degree " + std::to_string(n) + " outside [2, 30]");
    }
    if (!modulus) return Field(n, gf2poly::default_modulus(n));

    const std::uint64_t f = *modulus;
    if (gf2poly::degree(f) != n) {
        throw ParamError("modulus_degree", "modulus degree " + std::to_string(gf2poly::degree(f)) +
                                               " does not match n = " + std::to_string(n));
    }
    if (auto factor = gf2poly::smallest_factor_degree(f)) {
        throw ReducibleModulus(f, *factor);
    }
    return Field(n, f);
}

Field::Field(int n, std::uint64_t modulus) : n_(n), modulus_(modulus) {
    const std::uint64_t order = group_order();
    const auto primes = prime_factors(order);
    for (std::uint32_t g = 2;; ++g) {
        const Elt cand{g};
        const bool primitive = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
            return pow(cand, order / p) != one();
        });
        if (primitive) {
            generator_ = cand;
            break;
        }
    }

    if (n_ <= kTableMaxDegree) {
        auto t = std::make_shared<LogTables>();
        t->exp.resize(order);
        t->log.assign(size(), 0);
        Elt x = one();
        for (std::uint64_t i = 0; i < order; ++i) {
            t->exp[i] = x.bits;
            t->log[x.bits] = static_cast<std::uint32_t>(i);
            x = mul(x, generator_);
        }
        tables_ = std::move(t);
    }
}

Elt Field::element(std::uint64_t bits) const {
    if (bits >= size()) {
        throw ParamError("element_out_of_range",
                         "element " + std::to_string(bits) + " does not fit in GF(2^" +
                             std::to_string(n_) + ")");
    }
    return Elt{static_cast<std::uint32_t>(bits)};
}

Elt Field::mul(Elt a, Elt b) const noexcept {
    std::uint64_t x = a.bits;
    std::uint64_t y = b.bits;
    std::uint64_t prod = 0;
    while (y != 0) {
        if (y & 1) prod ^= x;
        y >>= 1;
        x <<= 1;
    }
    for (int d = gf2poly::degree(prod); d >= n_; d = gf2poly::degree(prod)) {
        prod ^= modulus_ << (d - n_);
    }
    return Elt{static_cast<std::uint32_t>(prod)};
}

Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
    if (a.is_zero()) return e == 0 ? one() : zero();
    e %= group_order();
    Elt acc = one();
    Elt base = a;
    while (e != 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Elt Field::frobenius(Elt a, int i) const noexcept {
    for (int j = 0; j < i % n_; ++j) a = mul(a, a);
    return a;
}

Elt Field::inv(Elt a) const {
    if (a.is_zero()) throw DomainError("inverse of zero");
    return pow(a, group_order() - 1);
}

int Field::trace_abs(Elt a) const noexcept {
    Elt acc = zero();
    Elt t = a;
    for (int i = 0; i < n_; ++i) {
        acc += t;
        t = mul(t, t);
    }
    return static_cast<int>(acc.bits);
}

void Field::require_even(const char* op) const {
    if (n_ % 2 != 0) {
        throw DomainError(std::string(op) + " requires an even extension degree, got n = " +
                          std::to_string(n_));
    }
}

Elt Field::conjugate(Elt a) const {
    require_even("conjugate");
    return frobenius(a, n_ / 2);
}

bool Field::in_subfield(Elt a) const { return conjugate(a) == a; }

int Field::subfield_trace(Elt a) const {
    if (!in_subfield(a)) throw DomainError("subfield_trace: element not in GF(2^m)");
    Elt acc = zero();
    Elt t = a;
    for (int i = 0; i < n_ / 2; ++i) {
        acc += t;
        t = mul(t, t);
    }
    return static_cast<int>(acc.bits);
}

Elt Field::subfield_sqrt(Elt y) const {
    if (!in_subfield(y)) throw DomainError("subfield_sqrt: element not in GF(2^m)");
    return frobenius(y, n_ / 2 - 1);
}

bool Field::in_unit_circle(Elt v) const {
    return !v.is_zero() && mul(v, conjugate(v)) == one();
}

Polar Field::polar_decompose(Elt a) const {
    require_even("polar_decompose");
    if (a.is_zero()) throw DomainError("polar_decompose: zero has no polar form");
    const Elt u = subfield_sqrt(mul(a, conjugate(a)));
    return Polar{u, mul(a, inv(u))};
}

std::vector<Elt> Field::unit_circle() const {
    require_even("unit_circle");
    const std::uint64_t m = static_cast<std::uint64_t>(n_ / 2);
    const Elt h = pow(generator_, (std::uint64_t{1} << m) - 1);
    std::vector<Elt> out;
    out.reserve((std::size_t{1} << m) + 1);
    Elt v = one();
    for (std::uint64_t i = 0; i <= (std::uint64_t{1} << m); ++i) {
        out.push_back(v);
        v = mul(v, h);
    }
    return out;
}

std::vector<Elt> Field::subfield_elements() const {
    require_even("subfield_elements");
    const std::uint64_t m = static_cast<std::uint64_t>(n_ / 2);
    // GF(2^m)* is generated by g^(2^m + 1).
    const Elt h = pow(generator_, (std::uint64_t{1} << m) + 1);
    std::vector<Elt> out{zero()};
    Elt u = one();
    for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << m); ++i) {
        out.push_back(u);
        u = mul(u, h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nihoapn
