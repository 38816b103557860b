#pragma once

#include <gmpxx.h>

namespace fibsemi {

// Fibonacci numbers, 1-based: fib(1) == fib(2) == 1, fib(3) == 2.
//
// Every other module indexes Fibonacci numbers with this convention, so that
// fib(3) = 2 is the smallest generator the triple formulas accept. An
// off-by-one here corrupts everything downstream; test_fibonacci pins the
// convention against an independent run of the recurrence.
//
// Exact for every index the host memory allows. Throws std::domain_error for
// n < 1.
mpz_class fib(long n);

// gcd(fib(m), fib(n)), computed from the two values. Fibonacci is a strong
// divisibility sequence, so the result always equals fib(gcd(m, n)).
mpz_class fib_gcd(long m, long n);

}  // namespace fibsemi
