#pragma once

// Executable checks of the auxiliary results used to derive the closed
// forms: each checker compares a brute-force count over the field against
// the stated criterion and reports agreement.

#include <cstdint>
#include <optional>
#include <vector>

#include "nihoapn/field.hpp"
#include "nihoapn/niho.hpp"

namespace nihoapn {

// x -> (x + conj(theta)) / (x + theta) maps GF(2^m) bijectively onto the
// unit circle minus {1}. theta must lie outside GF(2^m).
bool check_lemma1(const Field& field, Elt theta);

// Which trace the root criterion applies to b / a^2. Under b = a^(1 - 2^m)
// that quotient lies in GF(2^m), where the absolute trace vanishes
// identically, so only the subfield trace can make the criterion hold.
enum class Lemma2Trace {
    Subfield,  // Tr_1^m
    Absolute,  // Tr_1^n
};

// x^2 + a x + b has two roots on the unit circle iff b = a^(1 - 2^m) and
// Tr(b / a^2) = 1, with the trace chosen by `form`. Returns whether the root
// count agrees with the criterion. a, b nonzero, n even.
bool check_lemma2(const Field& field, Elt a, Elt b, Lemma2Trace form = Lemma2Trace::Subfield);

// x^(2^r) + x = a has 2 roots when Tr_1^n(a) = 0 and none otherwise.
// Requires gcd(r, n) = 1.
bool check_lemma3(const Field& field, int r, Elt a);

enum class Verdict { Fail, Pass, DegeneratePass };

// x^(2^k+1) + y^(2^k+1)
//   = (x+y)^(2^k+1) + sum_{i<k} (xy)^(2^i) (x+y)^(2^k - 2^(i+1) + 1).
// Every exponent on x + y is at least 1, so x = y gives 0 = 0 on both sides
// without any 0^0 convention; it is reported as DegeneratePass.
// 1 <= k <= 62.
Verdict check_lemma4(const Field& field, int k, Elt x, Elt y);

struct Lemma5Result {
    bool pass = false;
    std::uint64_t field_roots = 0;
    std::uint64_t circle_roots = 0;  // 0 for odd n
    bool parametrization_checked = false;
};

// Roots of Q(x) = x^(2^r+1) + a x^(2^r) + b x + c number 0, 1, 2 or
// 2^r0 + 1 with r0 = gcd(r, n). For n = 2m with at least three roots
// x0, x1, x2 on the unit circle, the circle holds exactly 2^r1 + 1 roots
// (r1 = gcd(r0, m)), x0 + A x1 + (1+A) x2 != 0 for all A in GF(2^r1), and
// the remaining circle roots are
//   (x1 x2 + A x0 x2 + (1+A) x0 x1) / (x0 + A x1 + (1+A) x2),
// A in GF(2^r1) \ GF(2). r >= 1.
Lemma5Result check_lemma5(const Field& field, int r, Elt a, Elt b, Elt c);

// Coefficients (a, b, c) of a monic Q with the three given distinct roots,
// solving the 3x3 linear system; nullopt when it is singular.
struct Lemma5Coeffs {
    Elt a, b, c;
};
std::optional<Lemma5Coeffs> lemma5_through_roots(const Field& field, int r, Elt x0, Elt x1,
                                                 Elt x2);

// ---- Phi sets ----

// (conj(b) y^(2^k) + 1) / (y^(2^k) + b); nullopt when the denominator is 0.
std::optional<Elt> phi_partner(const Field& field, int k, Elt b, Elt y);

// Selection rule for the quartic condition on y.
enum class QuarticForm {
    // (b + conj(b)^(2^k)) y^(2^k+1) + (conj(b)^(2^k+1) + 1) y^(2^k)
    //   + (b^(2^k+1) + 1) y + b^(2^k) + conj(b) = 0.
    // Does not agree with phi_set in general.
    ShiftK,
    // Same coefficients with y^(2^(2k)+1) and y^(2^(2k)). Equals phi_set,
    // being the substitution of z = phi_partner(y) into the second equation.
    Shift2K,
};

struct PhiSet {
    Elt b;
    std::vector<Elt> members;  // sorted
};

// y on the unit circle with y != 1, y^(2^k) + b != 0, y != phi_partner(y)
// and (y + conj(b)) z^(2^k) + b y + 1 = 0 for z = phi_partner(y), i.e. the
// two-equation system before eliminating z.
// Requires n = 2m <= 16, b != 1.
PhiSet phi_set(const Field& field, const NihoParams& params, Elt b);

// Same side conditions, selected by the single quartic in the given form.
PhiSet phi_set_quartic(const Field& field, const NihoParams& params, Elt b, QuarticForm form);

inline constexpr int kPhiSetMaxDegree = 16;

}  // namespace nihoapn
