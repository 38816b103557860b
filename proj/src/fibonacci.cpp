#include "fibsemi/fibonacci.hpp"

#include <stdexcept>
#include <string>

namespace fibsemi {

mpz_class fib(long n) {
    if (n < 1) {
        throw std::domain_error("fib: index must be >= 1, got " + std::to_string(n));
    }
    // mpz_fib_ui uses F(0) = 0, F(1) = 1, which agrees with the 1-based
    // convention F(1) = F(2) = 1 on every index we accept.
    mpz_class f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class fib_gcd(long m, long n) {
    const mpz_class fm = fib(m);
    const mpz_class fn = fib(n);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), fm.get_mpz_t(), fn.get_mpz_t());
    return g;
}

}  // namespace fibsemi
