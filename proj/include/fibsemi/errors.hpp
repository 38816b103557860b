#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibsemi {

// Default ceiling on residue-table sizes (Apery sets, sieves, gap lists).
// Overridable everywhere a cap parameter appears; the CLI exposes it as
// --max-modulus and the SEMIGROUP_MAX_MODULUS environment variable.
inline constexpr std::size_t kDefaultModulusCap = 10'000'000;

// Generators whose gcd is not 1 do not define a numerical semigroup.
class NonUnitGcdError : public std::domain_error {
public:
    explicit NonUnitGcdError(mpz_class gcd)
        : std::domain_error("generators have gcd = " + gcd.get_str() + " (must be 1)"),
          gcd_(std::move(gcd)) {}

    const mpz_class& gcd() const noexcept { return gcd_; }

private:
    mpz_class gcd_;
};

// A computation would exceed the configured modulus/memory cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Signalled by apery_set when the smallest generator is 1: every nonnegative
// integer is representable, so no Apery set exists. Callers map this to a
// Frobenius number of -1.
class AllRepresentableError : public std::domain_error {
public:
    AllRepresentableError()
        : std::domain_error("smallest generator is 1: every nonnegative integer is representable") {}
};

}  // namespace fibsemi
