#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fibsemi/errors.hpp"

namespace fibsemi {

// Frobenius number of two coprime generators: g(a, b) = a*b - a - b
// (Sylvester). Requires a, b >= 2; a set containing 1 has Frobenius number -1
// and is handled by the generic routines instead.
mpz_class frobenius_two(const mpz_class& a, const mpz_class& b);

// Frobenius number of the arithmetic sequence a, a+d, ..., a+k*d:
//   g = a * floor((a - 2) / k) + d * (a - 1).
// Requires a >= 2, d >= 1, 1 <= k <= a - 1 and gcd(a, d) = 1; the classical
// hypotheses, enforced here even though the formula is often quoted bare.
mpz_class frobenius_arithmetic(const mpz_class& a, const mpz_class& d, const mpz_class& k);

// The semigroup <F(i), F(i+2), F(i+k)> together with the Euclidean
// decomposition F(i) - 1 = r*F(k) + l, 0 <= l < F(k), that drives the closed
// form. Requires i, k >= 3.
struct FibTriple {
    long i = 0;
    long k = 0;
    mpz_class a;  // F(i)
    mpz_class b;  // F(i+2)
    mpz_class c;  // F(i+k)
    mpz_class r;  // floor((F(i) - 1) / F(k))
    mpz_class l;  // F(i) - 1 - r*F(k)
};
FibTriple fib_triple(long i, long k);

enum class Branch { FirstCase, Otherwise };

// Which branch of the triple formula applies. FirstCase iff r = 0, or r >= 1
// and F(k-2)*F(i) < (F(i) - r*F(k))*F(i+2), with the strict inequality taken
// exactly as written. For r >= 1 the two sides are values of distinct members
// of a complete residue system and can never be equal; a tie would mean an
// arithmetic bug, so it throws std::logic_error instead of choosing quietly.
struct CaseSelector {
    Branch branch = Branch::FirstCase;
    mpz_class lhs;  // F(k-2) * F(i)
    mpz_class rhs;  // (F(i) - r*F(k)) * F(i+2)
    mpz_class r;
};
CaseSelector theorem_case(const FibTriple& t);

// Frobenius number of <F(i), F(i+2), F(i+k)>:
//   FirstCase:  (F(i) - 1)*F(i+2) - F(i)*(r*F(k-2) + 1)
//   Otherwise:  (r*F(k) - 1)*F(i+2) - F(i)*((r-1)*F(k-2) + 1)
mpz_class frobenius_fib_triple(long i, long k);

// Gap count of <F(i), F(i+2), F(i+k)>:
//   ((F(i) - 1)*(F(i+2) - 1) - r*F(k-2)*(2*F(i) - F(k)*(1 + r))) / 2
// with the division by 2 asserted exact.
mpz_class genus_fib_triple(long i, long k);

// g(F(i), F(i+1), F(l)) for l >= i + 2 collapses to g(F(i), F(i+1)): the third
// generator is itself a combination of the first two, so the semigroup is
// unchanged. Requires i >= 3.
mpz_class frobenius_fib_consecutive(long i, long l);

// The explicit residue system from the triple analysis:
//   s_x = x*F(i+2) - floor(x / F(k)) * F(k-2) * F(i),  x = 0 .. F(i)-1.
// Taken mod F(i) these form a complete residue system, and as a set they
// equal the Apery set of F(i) in <F(i+2), F(i+k)>. Returned in order of x.
// Throws ResourceLimitError when F(i) > cap.
std::vector<mpz_class> sprime_set(long i, long k, std::size_t cap = kDefaultModulusCap);

// sum_{j=0}^{F(i)-1} floor(j / F(k)) in closed form:
//   F(k) * r*(r-1)/2 + r*(l+1).
mpz_class floor_sum(long i, long k);

}  // namespace fibsemi
