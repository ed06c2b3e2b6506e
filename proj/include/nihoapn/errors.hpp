#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nihoapn {

// Raised when an operation receives an argument outside its mathematical
// domain (inverse of zero, non-subfield element passed to a subfield op...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when user-supplied parameters fail validation. `code` is a short
// machine-readable tag that the CLI copies into its error JSON.
class ParamError : public std::invalid_argument {
public:
    ParamError(std::string code, const std::string& what)
        : std::invalid_argument(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Modulus polynomial has a nontrivial factor.
class ReducibleModulus : public ParamError {
public:
    ReducibleModulus(std::uint64_t modulus, int factor_degree);

    int factor_degree() const noexcept { return factor_degree_; }

private:
    int factor_degree_;
};

// Two integers expected to be coprime are not.
class NotCoprime : public ParamError {
public:
    NotCoprime(std::string code, const std::string& what, std::uint64_t gcd)
        : ParamError(std::move(code), what), gcd_(gcd) {}

    std::uint64_t gcd() const noexcept { return gcd_; }

private:
    std::uint64_t gcd_;
};

}  // namespace nihoapn
