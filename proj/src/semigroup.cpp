#include "fibsemi/semigroup.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

#include "fibsemi/bignum.hpp"

namespace fibsemi {

GeneratorSet make_generator_set(std::vector<mpz_class> raw) {
    if (raw.empty()) {
        throw std::domain_error("make_generator_set: at least one generator required");
    }
    for (const mpz_class& g : raw) {
        if (g < 1) {
            throw std::domain_error("make_generator_set: generators must be >= 1, got " +
                                    g.get_str());
        }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    mpz_class g = raw.front();
    for (std::size_t j = 1; j < raw.size() && g != 1; ++j) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), raw[j].get_mpz_t());
    }
    if (g != 1) {
        throw NonUnitGcdError(std::move(g));
    }
    return GeneratorSet(std::move(raw));
}

GeneratorSet make_generator_set(std::initializer_list<long> raw) {
    std::vector<mpz_class> v;
    v.reserve(raw.size());
    for (long g : raw) v.emplace_back(g);
    return make_generator_set(std::move(v));
}

AperySet apery_set(const GeneratorSet& gens, std::size_t cap) {
    const mpz_class& a1 = gens.a1();
    if (a1 == 1) {
        throw AllRepresentableError();
    }
    if (a1 > static_cast<unsigned long>(cap)) {
        throw ResourceLimitError("apery_set: modulus " + a1.get_str() + " exceeds cap " +
                                 std::to_string(cap));
    }
    const std::size_t m = a1.get_ui();

    // One edge bundle per generator beyond a1. Generators divisible by a1
    // only produce self-loops of positive weight and can never improve a
    // distance.
    struct Edge {
        std::size_t step;
        mpz_class weight;
    };
    std::vector<Edge> edges;
    for (std::size_t j = 1; j < gens.size(); ++j) {
        const mpz_class& a = gens.generators()[j];
        const std::size_t step = mpz_fdiv_ui(a.get_mpz_t(), m);
        if (step != 0) edges.push_back({step, a});
    }

    // Dijkstra from residue 0. Distances are exact big integers; the final
    // table is the unique shortest-distance vector, so the result does not
    // depend on tie-breaking inside the queue.
    std::vector<mpz_class> dist(m);
    std::vector<char> settled(m, 0);
    std::vector<char> reached(m, 0);
    using Item = std::pair<mpz_class, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[0] = 0;
    reached[0] = 1;
    queue.emplace(mpz_class(0), 0);
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (settled[v]) continue;
        settled[v] = 1;
        for (const Edge& e : edges) {
            std::size_t u = v + e.step;
            if (u >= m) u -= m;
            mpz_class nd = d + e.weight;
            if (!reached[u] || nd < dist[u]) {
                dist[u] = std::move(nd);
                reached[u] = 1;
                queue.emplace(dist[u], u);
            }
        }
    }
    // gcd(generators) = 1 makes every residue class reachable.
    for (std::size_t l = 0; l < m; ++l) {
        if (!settled[l]) {
            throw std::logic_error("apery_set: residue class " + std::to_string(l) +
                                   " unreachable; generator validation is broken");
        }
    }
    return AperySet{m, std::move(dist)};
}

mpz_class frobenius_from_apery(const AperySet& apery) {
    const mpz_class& top = *std::max_element(apery.values.begin(), apery.values.end());
    return top - static_cast<unsigned long>(apery.modulus);
}

mpz_class genus_from_apery(const AperySet& apery) {
    // Selmer: N = (1/a1) sum(t_l) - (a1-1)/2. Each t_l - l is a multiple of
    // a1 and sum(l) = a1(a1-1)/2, so summing the excesses gives the same
    // value with every division exact.
    mpz_class excess = 0;
    for (std::size_t l = 0; l < apery.modulus; ++l) {
        excess += apery.values[l] - static_cast<unsigned long>(l);
    }
    return exact_div(excess, mpz_class(static_cast<unsigned long>(apery.modulus)));
}

std::vector<bool> sieve_representable(const GeneratorSet& gens, const mpz_class& bound,
                                      std::size_t cap) {
    if (bound < 0) {
        throw std::domain_error("sieve_representable: bound must be >= 0, got " + bound.get_str());
    }
    if (bound > static_cast<unsigned long>(cap)) {
        throw ResourceLimitError("sieve_representable: bound " + bound.get_str() +
                                 " exceeds cap " + std::to_string(cap));
    }
    const std::size_t b = bound.get_ui();
    std::vector<bool> table(b + 1, false);
    table[0] = true;

    std::vector<std::size_t> small;
    for (const mpz_class& g : gens.generators()) {
        if (g <= static_cast<unsigned long>(b)) small.push_back(g.get_ui());
    }
    for (std::size_t n = 1; n <= b; ++n) {
        for (std::size_t a : small) {
            if (a > n) break;  // generators are ascending
            if (table[n - a]) {
                table[n] = true;
                break;
            }
        }
    }
    return table;
}

bool is_representable(const GeneratorSet& gens, const mpz_class& n, std::size_t cap) {
    if (n < 0) return false;
    if (n == 0) return true;
    if (gens.contains_one()) return true;
    if (n <= static_cast<unsigned long>(cap)) {
        return sieve_representable(gens, n, cap).back();
    }
    // Beyond the sieve range: n is representable iff it is at least the least
    // representable element of its residue class.
    const AperySet apery = apery_set(gens, cap);
    const std::size_t l = mpz_fdiv_ui(n.get_mpz_t(), apery.modulus);
    return n >= apery.values[l];
}

mpz_class frobenius_generic(const GeneratorSet& gens, std::size_t cap) {
    if (gens.contains_one()) return -1;
    return frobenius_from_apery(apery_set(gens, cap));
}

mpz_class frobenius_by_sieve(const GeneratorSet& gens, std::size_t cap) {
    if (gens.contains_one()) return -1;
    const mpz_class bound = gens.a1() * gens.largest();
    const std::vector<bool> table = sieve_representable(gens, bound, cap);
    for (std::size_t n = table.size(); n-- > 0;) {
        if (!table[n]) return mpz_class(static_cast<unsigned long>(n));
    }
    throw std::logic_error("frobenius_by_sieve: no gap below a1*an with a1 >= 2");
}

mpz_class genus_generic(const GeneratorSet& gens, std::size_t cap) {
    if (gens.contains_one()) return 0;
    return genus_from_apery(apery_set(gens, cap));
}

std::vector<mpz_class> gaps(const GeneratorSet& gens, std::size_t cap) {
    if (gens.contains_one()) return {};
    const AperySet apery = apery_set(gens, cap);
    const mpz_class frobenius = frobenius_from_apery(apery);
    const mpz_class count = genus_from_apery(apery);
    if (count > static_cast<unsigned long>(cap)) {
        throw ResourceLimitError("gaps: list would hold " + count.get_str() +
                                 " entries, exceeding cap " + std::to_string(cap));
    }
    // n is a gap iff it falls below the least representable element of its
    // class. The loop is bounded: at least half of [1, frobenius] are gaps,
    // so frobenius <= 2 * count - 1.
    std::vector<mpz_class> out;
    out.reserve(count.get_ui());
    std::size_t residue = 1 % apery.modulus;
    for (mpz_class n = 1; n <= frobenius; ++n) {
        if (n < apery.values[residue]) out.push_back(n);
        if (++residue == apery.modulus) residue = 0;
    }
    if (mpz_class(out.size()) != count) {
        throw std::logic_error("gaps: enumerated count disagrees with Selmer's formula");
    }
    return out;
}

}  // namespace fibsemi
