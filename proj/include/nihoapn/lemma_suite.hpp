#pragma once

// Seeded driver that runs the lemma checkers over their exhaustive or
// sampled domains and tallies outcomes per (lemma, field).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nihoapn {

enum class LemmaId { Lemma1, Lemma2, Lemma3, Lemma4, Lemma5, Phi };

std::string to_string(LemmaId id);
// "lemma1".."lemma5", "phi"; nullopt otherwise.
std::optional<LemmaId> parse_lemma_id(const std::string& name);

struct LemmaTally {
    LemmaId lemma = LemmaId::Lemma1;
    int n = 0;
    bool exhaustive = false;
    std::uint64_t cases = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    // Lemma 4 with x = y.
    std::uint64_t degenerate = 0;
    // Lemma 5 cases with >= 3 unit-circle roots (parametrization checked).
    std::uint64_t circle_cases = 0;
    // Lemma 2: inputs where the absolute-trace criterion disagrees with the
    // root count. Phi: b values where the 2^k-shift quartic disagrees with
    // the two-equation system. Informational, never counted as a failure.
    std::uint64_t alternate_form_mismatches = 0;
    // First few failing inputs, human readable.
    std::vector<std::string> counterexamples;

    friend bool operator==(const LemmaTally&, const LemmaTally&) = default;
};

struct LemmaSuiteOptions {
    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;  // per field, for the sampled lemmas
    std::set<LemmaId> only;         // empty = all
    std::optional<int> n;           // restrict to one field degree
};

struct LemmaSuiteReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<LemmaTally> tallies;
    bool vacuous = false;  // nothing was checked

    std::uint64_t total_failures() const noexcept;
    friend bool operator==(const LemmaSuiteReport&, const LemmaSuiteReport&) = default;
};

// Default field degrees per lemma.
std::vector<int> default_lemma_fields(LemmaId id);

LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& opts);

}  // namespace nihoapn
