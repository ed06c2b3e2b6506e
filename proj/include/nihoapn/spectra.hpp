#pragma once

// Brute-force differential and boomerang data for power functions x^d.
//
// For a power function DDT(a, b) = DDT(1, b / a^d) and likewise for the BCT,
// so every table here is the single row a = 1.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nihoapn/field.hpp"

namespace nihoapn {

// value -> frequency, zero frequencies omitted.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

struct DiffSpectrum {
    Histogram omega;
    std::uint64_t delta = 0;  // differential uniformity

    friend bool operator==(const DiffSpectrum&, const DiffSpectrum&) = default;
};

struct BoomSpectrum {
    Histogram nu;
    std::uint64_t beta = 0;  // boomerang uniformity

    friend bool operator==(const BoomSpectrum&, const BoomSpectrum&) = default;
};

// Builds a spectrum from a histogram; delta / beta is the largest key.
DiffSpectrum make_diff_spectrum(Histogram omega);
BoomSpectrum make_boom_spectrum(Histogram nu);

// x -> x^d over a fixed field with its full evaluation table.
class PowerFunction {
public:
    // d is reduced modulo 2^n - 1; d = 0 (mod 2^n - 1) is rejected.
    PowerFunction(Field field, std::uint64_t d);

    const Field& field() const noexcept { return field_; }
    std::uint64_t exponent() const noexcept { return d_; }
    std::span<const std::uint32_t> table() const noexcept { return table_; }
    Elt operator()(Elt x) const noexcept { return Elt{table_[x.bits]}; }

private:
    Field field_;
    std::uint64_t d_;
    std::vector<std::uint32_t> table_;
};

// Maximum field size accepted by bct_naive (2^(2n) pair sweep).
inline constexpr int kNaiveBctMaxDegree = 12;

// entry[b] = #{x : F(x) + F(x+1) = b}. `jobs` bounds worker threads; the
// result does not depend on it.
std::vector<std::uint32_t> ddt_row(const PowerFunction& f, unsigned jobs = 1);

DiffSpectrum diff_spectrum(const PowerFunction& f, unsigned jobs = 1);
DiffSpectrum diff_spectrum_from_row(std::span<const std::uint32_t> row);

// max{DDT(1, b) : b not in {0, 1}} == 2.
bool is_locally_apn(const PowerFunction& f, unsigned jobs = 1);
bool is_locally_apn_row(std::span<const std::uint32_t> row);

// Number of (x, y) with F(x+a) + F(y+a) = b and F(x) + F(y) = b, by direct
// enumeration of all pairs. Requires a, b != 0 and n <= kNaiveBctMaxDegree.
std::uint64_t bct_naive(const PowerFunction& f, Elt a, Elt b);

// The same count for every b at once (entry[0] is cleared). Still a plain
// pair enumeration; used as the oracle for bct_fiber.
std::vector<std::uint64_t> bct_naive_row(const PowerFunction& f, Elt a);

// Partition of the field by Delta(x) = F(x+1) + F(x), in CSR form: the
// fiber of c is members[offsets[c] .. offsets[c+1]).
struct DeltaFibers {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> members;

    std::span<const std::uint32_t> fiber(Elt c) const noexcept {
        return std::span<const std::uint32_t>(members).subspan(
            offsets[c.bits], offsets[c.bits + 1] - offsets[c.bits]);
    }
};

DeltaFibers delta_fibers(const PowerFunction& f);

// BCT(1, b) for every b via the fibers of Delta: (x, y) solves the system
// iff Delta(x) = Delta(y) and b = F(x) + F(y). entry[0] is cleared.
std::vector<std::uint64_t> bct_fiber(const PowerFunction& f, unsigned jobs = 1);

// Histogram of bct_fiber over b != 0.
BoomSpectrum boom_spectrum(const PowerFunction& f, unsigned jobs = 1);
BoomSpectrum boom_spectrum_from_row(std::span<const std::uint64_t> row);

// Brute-force bijectivity of x -> x^d.
bool is_permutation(const PowerFunction& f);

}  // namespace nihoapn
