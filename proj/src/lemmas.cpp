#include "nihoapn/lemmas.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "nihoapn/errors.hpp"

namespace nihoapn {

namespace {

using u64 = std::uint64_t;

void require_even(const Field& field, const char* who) {
    if (field.degree() % 2 != 0) {
        throw DomainError(std::string(who) + " requires an even extension degree");
    }
}

// Elements of GF(2^r) inside the field (r | n), as powers of a generator.
std::vector<Elt> subfield_of_degree(const Field& field, int r) {
    const u64 sub_order = (u64{1} << r) - 1;
    const Elt h = field.pow(field.generator(), field.group_order() / sub_order);
    std::vector<Elt> out{Field::zero()};
    Elt a = Field::one();
    for (u64 i = 0; i < sub_order; ++i) {
        out.push_back(a);
        a = field.mul(a, h);
    }
    return out;
}

}  // namespace

bool check_lemma1(const Field& field, Elt theta) {
    require_even(field, "check_lemma1");
    const Elt theta_bar = field.conjugate(theta);
    if (theta_bar == theta) throw DomainError("check_lemma1: theta lies in GF(2^m)");

    std::set<Elt> image;
    for (Elt x : field.subfield_elements()) {
        const Elt v = field.div(x + theta_bar, x + theta);
        if (v == Field::one() || !field.in_unit_circle(v)) return false;
        image.insert(v);
    }
    // |GF(2^m)| = |unit circle| - 1, so injective means onto.
    return image.size() == (u64{1} << (field.degree() / 2));
}

bool check_lemma2(const Field& field, Elt a, Elt b, Lemma2Trace form) {
    require_even(field, "check_lemma2");
    if (a.is_zero() || b.is_zero()) throw DomainError("check_lemma2: a and b must be nonzero");
    int roots = 0;
    for (Elt x : field.unit_circle()) {
        if ((field.mul(x, x + a) + b).is_zero()) ++roots;
    }
    const u64 q = u64{1} << (field.degree() / 2);
    // 1 - 2^m reduced modulo 2^n - 1.
    const u64 e = field.group_order() + 1 - q;
    if (b != field.pow(a, e)) return roots != 2;
    const Elt c = field.div(b, field.square(a));
    const int trace = form == Lemma2Trace::Subfield ? field.subfield_trace(c) : field.trace_abs(c);
    const bool criterion = trace == 1;
    return (roots == 2) == criterion;
}

bool check_lemma3(const Field& field, int r, Elt a) {
    if (r < 1 || std::gcd(r, field.degree()) != 1) {
        throw DomainError("check_lemma3: gcd(r, n) must be 1, got r = " + std::to_string(r));
    }
    u64 count = 0;
    for (u64 x = 0; x < field.size(); ++x) {
        const Elt e{static_cast<std::uint32_t>(x)};
        if (field.frobenius(e, r) + e == a) ++count;
    }
    if (count != 0 && count != 2) return false;
    return (count == 2) == (field.trace_abs(a) == 0);
}

Verdict check_lemma4(const Field& field, int k, Elt x, Elt y) {
    if (k < 1 || k > 62) throw DomainError("check_lemma4: k must lie in [1, 62]");
    const u64 two_k = u64{1} << k;
    const Elt s = x + y;
    const Elt xy = field.mul(x, y);
    const Elt lhs = field.pow(x, two_k + 1) + field.pow(y, two_k + 1);
    Elt rhs = field.pow(s, two_k + 1);
    for (int i = 0; i < k; ++i) {
        const u64 e = two_k - (u64{2} << i) + 1;
        rhs += field.mul(field.frobenius(xy, i), field.pow(s, e));
    }
    if (lhs != rhs) return Verdict::Fail;
    return x == y ? Verdict::DegeneratePass : Verdict::Pass;
}

Lemma5Result check_lemma5(const Field& field, int r, Elt a, Elt b, Elt c) {
    if (r < 1) throw DomainError("check_lemma5: r must be >= 1");
    const int n = field.degree();
    const int r0 = std::gcd(r, n);
    auto q_of = [&](Elt x) { return field.mul(field.frobenius(x, r), x + a) + field.mul(b, x) + c; };

    Lemma5Result res;
    for (u64 v = 0; v < field.size(); ++v) {
        if (q_of(Elt{static_cast<std::uint32_t>(v)}).is_zero()) ++res.field_roots;
    }
    const std::array<u64, 4> allowed = {0, 1, 2, (u64{1} << r0) + 1};
    res.pass = std::find(allowed.begin(), allowed.end(), res.field_roots) != allowed.end();
    if (!res.pass || n % 2 != 0) return res;

    std::vector<Elt> circle_roots;
    for (Elt v : field.unit_circle()) {
        if (q_of(v).is_zero()) circle_roots.push_back(v);
    }
    res.circle_roots = circle_roots.size();
    if (circle_roots.size() < 3) return res;

    res.parametrization_checked = true;
    const int r1 = std::gcd(r0, n / 2);
    if (circle_roots.size() != (u64{1} << r1) + 1) {
        res.pass = false;
        return res;
    }
    const Elt x0 = circle_roots[0], x1 = circle_roots[1], x2 = circle_roots[2];
    std::set<Elt> reached{x0, x1, x2};
    for (Elt big_a : subfield_of_degree(field, r1)) {
        const Elt one_a = Field::one() + big_a;
        const Elt den = x0 + field.mul(big_a, x1) + field.mul(one_a, x2);
        if (den.is_zero()) {
            res.pass = false;
            return res;
        }
        if (big_a == Field::zero() || big_a == Field::one()) continue;
        const Elt num = field.mul(x1, x2) + field.mul(big_a, field.mul(x0, x2)) +
                        field.mul(one_a, field.mul(x0, x1));
        reached.insert(field.div(num, den));
    }
    const std::set<Elt> actual(circle_roots.begin(), circle_roots.end());
    res.pass = reached == actual;
    return res;
}

std::optional<Lemma5Coeffs> lemma5_through_roots(const Field& field, int r, Elt x0, Elt x1,
                                                 Elt x2) {
    // Rows: [x^(2^r), x, 1 | x^(2^r+1)].
    std::array<std::array<Elt, 4>, 3> m;
    const std::array<Elt, 3> xs = {x0, x1, x2};
    for (std::size_t i = 0; i < 3; ++i) {
        const Elt xq = field.frobenius(xs[i], r);
        m[i] = {xq, xs[i], Field::one(), field.mul(xq, xs[i])};
    }
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = col;
        while (piv < 3 && m[piv][col].is_zero()) ++piv;
        if (piv == 3) return std::nullopt;
        std::swap(m[col], m[piv]);
        const Elt inv = field.inv(m[col][col]);
        for (auto& e : m[col]) e = field.mul(e, inv);
        for (std::size_t row = 0; row < 3; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Elt f = m[row][col];
            for (std::size_t j = 0; j < 4; ++j) m[row][j] += field.mul(f, m[col][j]);
        }
    }
    return Lemma5Coeffs{m[0][3], m[1][3], m[2][3]};
}

std::optional<Elt> phi_partner(const Field& field, int k, Elt b, Elt y) {
    const Elt yk = field.frobenius(y, k);
    const Elt den = yk + b;
    if (den.is_zero()) return std::nullopt;
    return field.div(field.mul(field.conjugate(b), yk) + Field::one(), den);
}

namespace {

void check_phi_preconditions(const Field& field, const NihoParams& params, Elt b) {
    require_even(field, "phi_set");
    if (field.degree() != 2 * params.m) throw DomainError("phi_set: field degree must be 2m");
    if (field.degree() > kPhiSetMaxDegree) throw DomainError("phi_set: field too large");
    if (b == Field::one()) throw DomainError("phi_set: b = 1 is handled separately");
    if (!field.contains(b)) throw DomainError("phi_set: b outside field");
}

// y on the circle, y != 1, y^(2^k) + b != 0, y != partner(y) and pred(y, z).
template <class Pred>
PhiSet collect_phi(const Field& field, const NihoParams& params, Elt b, Pred pred) {
    PhiSet out{b, {}};
    for (Elt y : field.unit_circle()) {
        if (y == Field::one()) continue;
        const auto z = phi_partner(field, params.k, b, y);
        if (!z || *z == y) continue;
        if (pred(y, *z)) out.members.push_back(y);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace

PhiSet phi_set(const Field& field, const NihoParams& params, Elt b) {
    check_phi_preconditions(field, params, b);
    const Elt b_bar = field.conjugate(b);
    return collect_phi(field, params, b, [&](Elt y, Elt z) {
        const Elt lhs = field.mul(y + b_bar, field.frobenius(z, params.k)) + field.mul(b, y);
        return lhs == Field::one();
    });
}

PhiSet phi_set_quartic(const Field& field, const NihoParams& params, Elt b, QuarticForm form) {
    check_phi_preconditions(field, params, b);
    const int k = params.k;
    const Elt b_bar = field.conjugate(b);
    const Elt bk = field.frobenius(b, k);
    const Elt b_bar_k = field.frobenius(b_bar, k);
    const Elt c3 = b + b_bar_k;
    const Elt c2 = field.mul(b_bar_k, b_bar) + Field::one();
    const Elt c1 = field.mul(bk, b) + Field::one();
    const Elt c0 = bk + b_bar;
    const int shift = form == QuarticForm::ShiftK ? k : 2 * k;
    return collect_phi(field, params, b, [&](Elt y, Elt) {
        const Elt ys = field.frobenius(y, shift);
        const Elt value = field.mul(c3, field.mul(ys, y)) + field.mul(c2, ys) + field.mul(c1, y) + c0;
        return value.is_zero();
    });
}

}  // namespace nihoapn
