#include "nihoapn/spectra.hpp"

#include <algorithm>
#include <string>

#include "nihoapn/errors.hpp"
#include "parallel.hpp"

namespace nihoapn {

namespace {

// Below this many iterations a single worker is used.
constexpr std::size_t kGrain = 1u << 12;

template <class Count>
std::vector<Count> merge(std::vector<std::vector<Count>>& parts) {
    std::vector<Count> out = std::move(parts.front());
    for (std::size_t w = 1; w < parts.size(); ++w) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += parts[w][i];
    }
    return out;
}

}  // namespace

DiffSpectrum make_diff_spectrum(Histogram omega) {
    DiffSpectrum s{std::move(omega), 0};
    if (!s.omega.empty()) s.delta = s.omega.rbegin()->first;
    return s;
}

BoomSpectrum make_boom_spectrum(Histogram nu) {
    BoomSpectrum s{std::move(nu), 0};
    if (!s.nu.empty()) s.beta = s.nu.rbegin()->first;
    return s;
}

PowerFunction::PowerFunction(Field field, std::uint64_t d)
    : field_(std::move(field)), d_(d % field_.group_order()) {
    if (d_ == 0) {
        throw ParamError("degenerate_exponent",
                         "exponent " + std::to_string(d) + " is 0 modulo 2^n - 1 = " +
                             std::to_string(field_.group_order()));
    }
    const std::uint64_t order = field_.group_order();
    table_.assign(field_.size(), 0);
    if (const LogTables* t = field_.log_tables()) {
        std::uint64_t j = 0;
        for (std::uint64_t i = 0; i < order; ++i) {
            table_[t->exp[i]] = t->exp[j];
            j += d_;
            if (j >= order) j -= order;
        }
    } else {
        // g^i -> (g^d)^i
        const Elt h = field_.pow(field_.generator(), d_);
        Elt x = Field::one(), y = Field::one();
        for (std::uint64_t i = 0; i < order; ++i) {
            table_[x.bits] = y.bits;
            x = field_.mul(x, field_.generator());
            y = field_.mul(y, h);
        }
    }
}

std::vector<std::uint32_t> ddt_row(const PowerFunction& f, unsigned jobs) {
    const auto table = f.table();
    const std::size_t size = table.size();
    const unsigned workers = detail::resolve_jobs(jobs, size / kGrain);
    std::vector<std::vector<std::uint32_t>> parts(workers);
    detail::for_each_chunk(size, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& row = parts[w];
        row.assign(size, 0);
        for (std::size_t x = begin; x < end; ++x) ++row[table[x] ^ table[x ^ 1]];
    });
    return merge(parts);
}

DiffSpectrum diff_spectrum_from_row(std::span<const std::uint32_t> row) {
    Histogram h;
    for (std::uint32_t v : row) ++h[v];
    return make_diff_spectrum(std::move(h));
}

DiffSpectrum diff_spectrum(const PowerFunction& f, unsigned jobs) {
    return diff_spectrum_from_row(ddt_row(f, jobs));
}

bool is_locally_apn_row(std::span<const std::uint32_t> row) {
    if (row.size() <= 2) return false;
    return *std::max_element(row.begin() + 2, row.end()) == 2;
}

bool is_locally_apn(const PowerFunction& f, unsigned jobs) {
    return is_locally_apn_row(ddt_row(f, jobs));
}

std::uint64_t bct_naive(const PowerFunction& f, Elt a, Elt b) {
    const Field& k = f.field();
    if (k.degree() > kNaiveBctMaxDegree) {
        throw ParamError("field_too_large",
                         "bct_naive enumerates 2^(2n) pairs and is limited to n <= " +
                             std::to_string(kNaiveBctMaxDegree) + "; use bct_fiber");
    }
    if (a.is_zero() || b.is_zero()) throw DomainError("bct_naive: a and b must be nonzero");
    if (!k.contains(a) || !k.contains(b)) throw DomainError("bct_naive: element outside field");
    const auto t = f.table();
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        const std::uint32_t fx = t[x], fxa = t[x ^ a.bits];
        for (std::uint32_t y = 0; y < t.size(); ++y) {
            if ((fx ^ t[y]) == b.bits && (fxa ^ t[y ^ a.bits]) == b.bits) ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t> bct_naive_row(const PowerFunction& f, Elt a) {
    const Field& k = f.field();
    if (k.degree() > kNaiveBctMaxDegree) {
        throw ParamError("field_too_large",
                         "bct_naive enumerates 2^(2n) pairs and is limited to n <= " +
                             std::to_string(kNaiveBctMaxDegree) + "; use bct_fiber");
    }
    if (a.is_zero() || !k.contains(a)) throw DomainError("bct_naive_row: invalid a");
    const auto t = f.table();
    std::vector<std::uint64_t> row(t.size(), 0);
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        const std::uint32_t fx = t[x], fxa = t[x ^ a.bits];
        for (std::uint32_t y = 0; y < t.size(); ++y) {
            const std::uint32_t b = fx ^ t[y];
            if ((fxa ^ t[y ^ a.bits]) == b) ++row[b];
        }
    }
    row[0] = 0;
    return row;
}

DeltaFibers delta_fibers(const PowerFunction& f) {
    const auto t = f.table();
    const std::size_t size = t.size();
    DeltaFibers out;
    out.offsets.assign(size + 1, 0);
    for (std::uint32_t x = 0; x < size; ++x) ++out.offsets[(t[x] ^ t[x ^ 1]) + 1];
    for (std::size_t c = 0; c < size; ++c) out.offsets[c + 1] += out.offsets[c];
    out.members.resize(size);
    std::vector<std::uint32_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
    for (std::uint32_t x = 0; x < size; ++x) out.members[cursor[t[x] ^ t[x ^ 1]]++] = x;
    return out;
}

std::vector<std::uint64_t> bct_fiber(const PowerFunction& f, unsigned jobs) {
    const auto t = f.table();
    const std::size_t size = t.size();
    const DeltaFibers fibers = delta_fibers(f);
    const unsigned workers = detail::resolve_jobs(jobs, size / kGrain);
    std::vector<std::vector<std::uint64_t>> parts(workers);
    detail::for_each_chunk(size, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        auto& row = parts[w];
        row.assign(size, 0);
        for (std::size_t c = begin; c < end; ++c) {
            const auto fiber = fibers.fiber(Elt{static_cast<std::uint32_t>(c)});
            for (std::uint32_t x : fiber) {
                const std::uint32_t fx = t[x];
                for (std::uint32_t y : fiber) ++row[fx ^ t[y]];
            }
        }
    });
    auto row = merge(parts);
    row[0] = 0;
    return row;
}

BoomSpectrum boom_spectrum_from_row(std::span<const std::uint64_t> row) {
    Histogram h;
    for (std::size_t b = 1; b < row.size(); ++b) ++h[row[b]];
    return make_boom_spectrum(std::move(h));
}

BoomSpectrum boom_spectrum(const PowerFunction& f, unsigned jobs) {
    return boom_spectrum_from_row(bct_fiber(f, jobs));
}

bool is_permutation(const PowerFunction& f) {
    std::vector<bool> seen(f.table().size(), false);
    for (std::uint32_t v : f.table()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace nihoapn
