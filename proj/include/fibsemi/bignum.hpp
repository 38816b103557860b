#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace fibsemi {

// Quotient of a division that must leave no remainder. Callers use this where
// divisibility is a theorem, so a failure means corrupted arithmetic upstream
// and throws std::logic_error instead of rounding.
inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw std::logic_error("exact_div: " + num.get_str() + " is not divisible by " +
                               den.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace fibsemi
