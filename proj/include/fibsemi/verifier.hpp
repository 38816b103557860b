#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibsemi/closed_forms.hpp"
#include "fibsemi/errors.hpp"

namespace fibsemi {

enum class Method { ClosedForm, Apery, Sieve };
std::string method_name(Method m);

// Parameter rectangle for the triple sweeps. Needs at least two methods,
// otherwise there is nothing to compare.
struct SweepSpec {
    long i_min = 3;
    long i_max = 14;
    long k_min = 3;
    long k_max = 12;
    std::vector<Method> methods = {Method::ClosedForm, Method::Apery};
    std::size_t modulus_cap = kDefaultModulusCap;

    bool has(Method m) const;
    void validate() const;  // throws std::domain_error
};

// One (i, k) cell of a triple sweep. Generators, decomposition and branch are
// always filled; per-method values are filled when the method was selected
// and feasible. Failures never abort the sweep: the reasons land in
// skip_reason and the affected cells stay empty.
struct TripleRow {
    long i = 0;
    long k = 0;
    mpz_class f_i, f_i2, f_ik;
    mpz_class r, l;
    Branch branch = Branch::FirstCase;

    std::optional<mpz_class> frobenius_closed, frobenius_apery, frobenius_sieve;
    std::optional<mpz_class> genus_closed, genus_apery;
    std::string skip_reason;

    std::chrono::nanoseconds elapsed_closed{0}, elapsed_apery{0}, elapsed_sieve{0};

    // Skipped: fewer than two values of either quantity, so no comparison
    // happened. Agree: every pair of computed values coincides.
    bool skipped() const;
    bool agree() const;
};

// Compares the closed forms for the Frobenius number and genus of
// <F(i), F(i+2), F(i+k)> against the selected generic methods, one row per
// (i, k), i ascending then k ascending. Rows with F(i) > modulus_cap keep
// their closed-form values but skip the oracle columns.
std::vector<TripleRow> sweep_triples(const SweepSpec& spec);

// Checks that the explicit residue system equals the Apery set of
// <F(i), F(i+2), F(i+k)> as a set, and that it covers every residue mod F(i).
struct SprimeRow {
    long i = 0;
    long k = 0;
    bool equal = false;
    bool complete_residues = false;
    std::string skip_reason;
    bool skipped() const { return !skip_reason.empty(); }
};
std::vector<SprimeRow> sweep_sprime(const SweepSpec& spec);

// Checks g(F(i), F(i+1), F(l)) == g(F(i), F(i+1)) over a rectangle. Requires
// l_min >= i_max + 2 so every pair in the rectangle is admissible.
struct ReductionRow {
    long i = 0;
    long l = 0;
    mpz_class f_i, f_i1, f_l;
    std::optional<mpz_class> closed, generic;
    bool equal = false;
    std::string skip_reason;
    bool skipped() const { return !skip_reason.empty(); }
};
std::vector<ReductionRow> sweep_reduction(long i_min, long i_max, long l_min, long l_max,
                                          std::size_t cap = kDefaultModulusCap);

// Checks the arithmetic-sequence formula against the Apery and sieve oracles
// for every 2 <= a <= a_max, 1 <= d <= d_max with gcd(a, d) = 1 and
// 1 <= k <= a-1 over the generators {a, a+d, ..., a+k*d}.
struct ArithmeticRow {
    long a = 0;
    long d = 0;
    long k = 0;
    std::optional<mpz_class> formula, apery, sieve;
    std::string skip_reason;
    bool skipped() const;
    bool agree() const;
};
std::vector<ArithmeticRow> sweep_arithmetic(long a_max, long d_max,
                                            std::size_t cap = kDefaultModulusCap);

// Serialization. Identical inputs give byte-identical strings; timing fields
// are deliberately not serialized. CSV columns for triple sweeps:
//   i,k,F_i,F_i+2,F_i+k,r,l,branch,frobenius_closed,frobenius_apery,
//   frobenius_sieve,genus_closed,genus_apery,agree,skip_reason
// with empty cells for unselected or infeasible methods.
std::string to_csv(const std::vector<TripleRow>& rows);
std::string to_csv(const std::vector<SprimeRow>& rows);
std::string to_csv(const std::vector<ReductionRow>& rows);
std::string to_csv(const std::vector<ArithmeticRow>& rows);
std::string to_json(const std::vector<TripleRow>& rows);
std::string to_json(const std::vector<SprimeRow>& rows);
std::string to_json(const std::vector<ReductionRow>& rows);
std::string to_json(const std::vector<ArithmeticRow>& rows);

std::string branch_name(Branch b);

// True when every non-skipped row agrees; the CLI turns false into exit 3.
bool all_agree(const std::vector<TripleRow>& rows);
bool all_agree(const std::vector<SprimeRow>& rows);
bool all_agree(const std::vector<ReductionRow>& rows);
bool all_agree(const std::vector<ArithmeticRow>& rows);

}  // namespace fibsemi
