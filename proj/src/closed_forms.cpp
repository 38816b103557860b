#include "fibsemi/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "fibsemi/bignum.hpp"
#include "fibsemi/fibonacci.hpp"

namespace fibsemi {

mpz_class frobenius_two(const mpz_class& a, const mpz_class& b) {
    if (a < 2 || b < 2) {
        throw std::domain_error("frobenius_two: generators must be >= 2, got " + a.get_str() +
                                ", " + b.get_str());
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        throw NonUnitGcdError(std::move(g));
    }
    return a * b - a - b;
}

mpz_class frobenius_arithmetic(const mpz_class& a, const mpz_class& d, const mpz_class& k) {
    if (a < 2) {
        throw std::domain_error("frobenius_arithmetic: a must be >= 2, got " + a.get_str());
    }
    if (d < 1) {
        throw std::domain_error("frobenius_arithmetic: d must be >= 1, got " + d.get_str());
    }
    if (k < 1 || k > a - 1) {
        throw std::domain_error("frobenius_arithmetic: k must satisfy 1 <= k <= a-1, got " +
                                k.get_str());
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (g != 1) {
        throw NonUnitGcdError(std::move(g));
    }
    return a * ((a - 2) / k) + d * (a - 1);
}

FibTriple fib_triple(long i, long k) {
    if (i < 3 || k < 3) {
        throw std::domain_error("fib_triple: indices must be >= 3, got i=" + std::to_string(i) +
                                ", k=" + std::to_string(k));
    }
    FibTriple t;
    t.i = i;
    t.k = k;
    t.a = fib(i);
    t.b = fib(i + 2);
    t.c = fib(i + k);
    const mpz_class fk = fib(k);
    t.r = (t.a - 1) / fk;  // both operands nonnegative, so / floors
    t.l = t.a - 1 - t.r * fk;
    if (t.l < 0 || t.l >= fk) {
        throw std::logic_error("fib_triple: decomposition out of range");
    }
    // gcd(F(i), F(i+2)) = F(gcd(i, i+2)) = F(1) or F(2) = 1.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
    if (g != 1) {
        throw std::logic_error("fib_triple: gcd(F(i), F(i+2)) != 1");
    }
    return t;
}

CaseSelector theorem_case(const FibTriple& t) {
    CaseSelector sel;
    sel.r = t.r;
    sel.lhs = fib(t.k - 2) * t.a;
    sel.rhs = (t.a - t.r * fib(t.k)) * t.b;
    sel.branch = (t.r == 0 || sel.lhs < sel.rhs) ? Branch::FirstCase : Branch::Otherwise;
    if (t.r >= 1 && sel.lhs == sel.rhs) {
        throw std::logic_error("theorem_case: comparison tie at i=" + std::to_string(t.i) +
                               ", k=" + std::to_string(t.k) +
                               "; the candidates are distinct residues, this is a bug");
    }
    return sel;
}

mpz_class frobenius_fib_triple(long i, long k) {
    const FibTriple t = fib_triple(i, k);
    const CaseSelector sel = theorem_case(t);
    const mpz_class fk2 = fib(k - 2);
    if (sel.branch == Branch::FirstCase) {
        return (t.a - 1) * t.b - t.a * (t.r * fk2 + 1);
    }
    return (t.r * fib(k) - 1) * t.b - t.a * ((t.r - 1) * fk2 + 1);
}

mpz_class genus_fib_triple(long i, long k) {
    const FibTriple t = fib_triple(i, k);
    const mpz_class numerator =
        (t.a - 1) * (t.b - 1) - t.r * fib(k - 2) * (2 * t.a - fib(k) * (1 + t.r));
    return exact_div(numerator, 2);
}

mpz_class frobenius_fib_consecutive(long i, long l) {
    if (i < 3) {
        throw std::domain_error("frobenius_fib_consecutive: i must be >= 3, got " +
                                std::to_string(i));
    }
    if (l < i + 2) {
        throw std::domain_error("frobenius_fib_consecutive: l must be >= i + 2, got l=" +
                                std::to_string(l));
    }
    return frobenius_two(fib(i), fib(i + 1));
}

std::vector<mpz_class> sprime_set(long i, long k, std::size_t cap) {
    if (i < 3 || k < 3) {
        throw std::domain_error("sprime_set: indices must be >= 3, got i=" + std::to_string(i) +
                                ", k=" + std::to_string(k));
    }
    const mpz_class fi = fib(i);
    if (fi > static_cast<unsigned long>(cap)) {
        throw ResourceLimitError("sprime_set: F(i) = " + fi.get_str() + " exceeds cap " +
                                 std::to_string(cap));
    }
    const std::size_t count = fi.get_ui();
    const mpz_class b = fib(i + 2);
    const mpz_class fk = fib(k);
    const mpz_class drop = fib(k - 2) * fi;  // subtracted once per completed block of F(k)

    std::vector<mpz_class> out;
    out.reserve(count);
    mpz_class xb = 0;       // x * F(i+2)
    mpz_class q_drop = 0;   // floor(x / F(k)) * F(k-2) * F(i)
    mpz_class in_block = 0; // x mod F(k)
    for (std::size_t x = 0; x < count; ++x) {
        out.push_back(xb - q_drop);
        xb += b;
        if (++in_block == fk) {
            in_block = 0;
            q_drop += drop;
        }
    }
    return out;
}

mpz_class floor_sum(long i, long k) {
    const FibTriple t = fib_triple(i, k);
    return fib(k) * exact_div(t.r * (t.r - 1), 2) + t.r * (t.l + 1);
}

}  // namespace fibsemi
