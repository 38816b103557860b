#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fibsemi/errors.hpp"

namespace fibsemi {

// Generators of a numerical semigroup: strictly ascending, no duplicates,
// overall gcd 1. Construct through make_generator_set.
class GeneratorSet {
public:
    const std::vector<mpz_class>& generators() const noexcept { return gens_; }

    // Smallest generator; the modulus for Apery computations.
    const mpz_class& a1() const noexcept { return gens_.front(); }
    const mpz_class& largest() const noexcept { return gens_.back(); }
    std::size_t size() const noexcept { return gens_.size(); }

    // When 1 is a generator the semigroup is all of N: the Frobenius number
    // is -1, the genus 0 and the gap list empty.
    bool contains_one() const noexcept { return gens_.front() == 1; }

private:
    friend GeneratorSet make_generator_set(std::vector<mpz_class> raw);
    explicit GeneratorSet(std::vector<mpz_class> gens) : gens_(std::move(gens)) {}

    std::vector<mpz_class> gens_;
};

// Sorts, deduplicates and validates. Throws std::domain_error when the input
// is empty or contains an entry < 1, NonUnitGcdError when the gcd is not 1.
GeneratorSet make_generator_set(std::vector<mpz_class> raw);
GeneratorSet make_generator_set(std::initializer_list<long> raw);

// Least representable element per residue class: values[l] is the smallest
// nonnegative integer congruent to l mod a1 that is a nonnegative integer
// combination of the generators other than a1. values[0] == 0.
struct AperySet {
    std::size_t modulus = 0;
    std::vector<mpz_class> values;
};

// Apery set of the semigroup with respect to its smallest generator, computed
// as single-source shortest paths on the residue graph: nodes 0..a1-1, and for
// each generator a_j > a1 an edge v -> (v + a_j) mod a1 of weight a_j. The
// distance from node 0 to node l is exactly values[l].
//
// Throws AllRepresentableError when a1 == 1 and ResourceLimitError when
// a1 > cap.
AperySet apery_set(const GeneratorSet& gens, std::size_t cap = kDefaultModulusCap);

// max(values) - a1 (Brauer-Shockley) and the gap count via Selmer's sum, read
// off an already-computed Apery set.
mpz_class frobenius_from_apery(const AperySet& apery);
mpz_class genus_from_apery(const AperySet& apery);

// Whether n is a nonnegative integer combination of the generators. Negative n
// is never representable, 0 always is. Checked against the definition by a
// sieve when n <= cap, and by the Apery threshold for larger n.
bool is_representable(const GeneratorSet& gens, const mpz_class& n,
                      std::size_t cap = kDefaultModulusCap);

// Membership table over [0, bound]: table[n] is true iff n is representable.
// Forward dynamic programming from table[0] = true. Throws ResourceLimitError
// when bound > cap.
std::vector<bool> sieve_representable(const GeneratorSet& gens, const mpz_class& bound,
                                      std::size_t cap = kDefaultModulusCap);

// Largest integer with no representation; -1 when 1 is a generator.
mpz_class frobenius_generic(const GeneratorSet& gens, std::size_t cap = kDefaultModulusCap);

// Frobenius number read off a sieve over [0, a1 * an]. The bound always
// exceeds the Frobenius number (every Apery value is a sum of at most a1 - 1
// generators), so this is an oracle independent of the shortest-path route.
mpz_class frobenius_by_sieve(const GeneratorSet& gens, std::size_t cap = kDefaultModulusCap);

// Number of gaps (positive integers with no representation), via Selmer:
// N = (1/a1) * sum(t_l) - (a1 - 1)/2, evaluated in exact arithmetic.
mpz_class genus_generic(const GeneratorSet& gens, std::size_t cap = kDefaultModulusCap);

// Ascending list of all gaps. Empty when 1 is a generator. Throws
// ResourceLimitError when the list would exceed cap entries.
std::vector<mpz_class> gaps(const GeneratorSet& gens, std::size_t cap = kDefaultModulusCap);

}  // namespace fibsemi
