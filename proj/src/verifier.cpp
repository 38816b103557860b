#include "fibsemi/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fibsemi/fibonacci.hpp"
#include "fibsemi/json_io.hpp"
#include "fibsemi/semigroup.hpp"

namespace fibsemi {

namespace {

using Clock = std::chrono::steady_clock;

std::string sanitize(std::string reason) {
    std::replace(reason.begin(), reason.end(), ',', ';');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    return reason;
}

void append_reason(std::string& target, const std::string& reason) {
    if (!target.empty()) target += "; ";
    target += sanitize(reason);
}

std::string cell(const std::optional<mpz_class>& v) {
    return v ? v->get_str() : std::string();
}

void put_optional(nlohmann::json& obj, const char* key, const std::optional<mpz_class>& v) {
    if (v) obj[key] = json_number(*v);
}

// All present values equal; vacuously true below two values.
bool coincide(std::initializer_list<const std::optional<mpz_class>*> values) {
    const mpz_class* first = nullptr;
    for (const auto* v : values) {
        if (!v->has_value()) continue;
        if (first == nullptr) {
            first = &v->value();
        } else if (*first != v->value()) {
            return false;
        }
    }
    return true;
}

int present(std::initializer_list<const std::optional<mpz_class>*> values) {
    int n = 0;
    for (const auto* v : values) n += v->has_value() ? 1 : 0;
    return n;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::Apery: return "apery";
        case Method::Sieve: return "sieve";
    }
    throw std::logic_error("method_name: unknown method");
}

std::string branch_name(Branch b) {
    return b == Branch::FirstCase ? "first" : "otherwise";
}

bool SweepSpec::has(Method m) const {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void SweepSpec::validate() const {
    if (i_min < 3 || i_min > i_max) {
        throw std::domain_error("sweep: need 3 <= i_min <= i_max");
    }
    if (k_min < 3 || k_min > k_max) {
        throw std::domain_error("sweep: need 3 <= k_min <= k_max");
    }
    std::vector<Method> distinct = methods;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) {
        throw std::domain_error("sweep: at least two methods required, nothing to compare");
    }
    if (modulus_cap < 1) {
        throw std::domain_error("sweep: modulus cap must be >= 1");
    }
}

bool TripleRow::skipped() const {
    return present({&frobenius_closed, &frobenius_apery, &frobenius_sieve}) < 2 &&
           present({&genus_closed, &genus_apery}) < 2;
}

bool TripleRow::agree() const {
    return coincide({&frobenius_closed, &frobenius_apery, &frobenius_sieve}) &&
           coincide({&genus_closed, &genus_apery});
}

std::vector<TripleRow> sweep_triples(const SweepSpec& spec) {
    spec.validate();
    std::vector<TripleRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.i_max - spec.i_min + 1) *
                 static_cast<std::size_t>(spec.k_max - spec.k_min + 1));
    for (long i = spec.i_min; i <= spec.i_max; ++i) {
        for (long k = spec.k_min; k <= spec.k_max; ++k) {
            TripleRow row;
            row.i = i;
            row.k = k;
            const FibTriple t = fib_triple(i, k);
            row.f_i = t.a;
            row.f_i2 = t.b;
            row.f_ik = t.c;
            row.r = t.r;
            row.l = t.l;
            row.branch = theorem_case(t).branch;

            if (spec.has(Method::ClosedForm)) {
                const auto start = Clock::now();
                row.frobenius_closed = frobenius_fib_triple(i, k);
                row.genus_closed = genus_fib_triple(i, k);
                row.elapsed_closed = Clock::now() - start;
            }

            const bool oracle_feasible = t.a <= static_cast<unsigned long>(spec.modulus_cap);
            if (!oracle_feasible) {
                append_reason(row.skip_reason, "F(i) = " + t.a.get_str() + " exceeds modulus cap " +
                                                   std::to_string(spec.modulus_cap));
            } else {
                const GeneratorSet gens = make_generator_set({t.a, t.b, t.c});
                if (spec.has(Method::Apery)) {
                    try {
                        const auto start = Clock::now();
                        const AperySet apery = apery_set(gens, spec.modulus_cap);
                        row.frobenius_apery = frobenius_from_apery(apery);
                        row.genus_apery = genus_from_apery(apery);
                        row.elapsed_apery = Clock::now() - start;
                    } catch (const std::exception& e) {
                        append_reason(row.skip_reason, std::string("apery: ") + e.what());
                    }
                }
                if (spec.has(Method::Sieve)) {
                    try {
                        const auto start = Clock::now();
                        row.frobenius_sieve = frobenius_by_sieve(gens, spec.modulus_cap);
                        row.elapsed_sieve = Clock::now() - start;
                    } catch (const std::exception& e) {
                        append_reason(row.skip_reason, std::string("sieve: ") + e.what());
                    }
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<SprimeRow> sweep_sprime(const SweepSpec& spec) {
    spec.validate();
    std::vector<SprimeRow> rows;
    for (long i = spec.i_min; i <= spec.i_max; ++i) {
        for (long k = spec.k_min; k <= spec.k_max; ++k) {
            SprimeRow row;
            row.i = i;
            row.k = k;
            const FibTriple t = fib_triple(i, k);
            if (t.a > static_cast<unsigned long>(spec.modulus_cap)) {
                append_reason(row.skip_reason, "F(i) = " + t.a.get_str() + " exceeds modulus cap " +
                                                   std::to_string(spec.modulus_cap));
                rows.push_back(std::move(row));
                continue;
            }
            try {
                std::vector<mpz_class> sprime = sprime_set(i, k, spec.modulus_cap);

                // Complete residue system: the residues mod F(i) are a
                // permutation of 0..F(i)-1.
                const std::size_t m = t.a.get_ui();
                std::vector<char> seen(m, 0);
                bool complete = true;
                for (const mpz_class& s : sprime) {
                    const std::size_t res = mpz_fdiv_ui(s.get_mpz_t(), m);
                    if (seen[res]) {
                        complete = false;
                        break;
                    }
                    seen[res] = 1;
                }
                row.complete_residues = complete && sprime.size() == m;

                AperySet apery =
                    apery_set(make_generator_set({t.a, t.b, t.c}), spec.modulus_cap);
                std::sort(sprime.begin(), sprime.end());
                std::sort(apery.values.begin(), apery.values.end());
                row.equal = sprime == apery.values;
            } catch (const std::exception& e) {
                append_reason(row.skip_reason, e.what());
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ReductionRow> sweep_reduction(long i_min, long i_max, long l_min, long l_max,
                                          std::size_t cap) {
    if (i_min < 3 || i_min > i_max) {
        throw std::domain_error("sweep_reduction: need 3 <= i_min <= i_max");
    }
    if (l_min > l_max || l_min < i_max + 2) {
        throw std::domain_error("sweep_reduction: need i_max + 2 <= l_min <= l_max");
    }
    std::vector<ReductionRow> rows;
    for (long i = i_min; i <= i_max; ++i) {
        for (long l = l_min; l <= l_max; ++l) {
            ReductionRow row;
            row.i = i;
            row.l = l;
            row.f_i = fib(i);
            row.f_i1 = fib(i + 1);
            row.f_l = fib(l);
            row.closed = frobenius_fib_consecutive(i, l);
            try {
                row.generic =
                    frobenius_generic(make_generator_set({row.f_i, row.f_i1, row.f_l}), cap);
                row.equal = *row.closed == *row.generic;
            } catch (const std::exception& e) {
                append_reason(row.skip_reason, e.what());
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool ArithmeticRow::skipped() const {
    return present({&formula, &apery, &sieve}) < 2;
}

bool ArithmeticRow::agree() const {
    return coincide({&formula, &apery, &sieve});
}

std::vector<ArithmeticRow> sweep_arithmetic(long a_max, long d_max, std::size_t cap) {
    if (a_max < 2 || d_max < 1) {
        throw std::domain_error("sweep_arithmetic: need a_max >= 2 and d_max >= 1");
    }
    std::vector<ArithmeticRow> rows;
    for (long a = 2; a <= a_max; ++a) {
        for (long d = 1; d <= d_max; ++d) {
            if (std::gcd(a, d) != 1) continue;
            for (long k = 1; k <= a - 1; ++k) {
                ArithmeticRow row;
                row.a = a;
                row.d = d;
                row.k = k;
                row.formula = frobenius_arithmetic(a, d, k);
                std::vector<mpz_class> gens;
                gens.reserve(static_cast<std::size_t>(k) + 1);
                for (long j = 0; j <= k; ++j) gens.emplace_back(a + j * d);
                const GeneratorSet set = make_generator_set(std::move(gens));
                try {
                    row.apery = frobenius_generic(set, cap);
                } catch (const std::exception& e) {
                    append_reason(row.skip_reason, std::string("apery: ") + e.what());
                }
                try {
                    row.sieve = frobenius_by_sieve(set, cap);
                } catch (const std::exception& e) {
                    append_reason(row.skip_reason, std::string("sieve: ") + e.what());
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<TripleRow>& rows) {
    std::ostringstream out;
    out << "i,k,F_i,F_i+2,F_i+k,r,l,branch,frobenius_closed,frobenius_apery,frobenius_sieve,"
           "genus_closed,genus_apery,agree,skip_reason\n";
    for (const TripleRow& row : rows) {
        out << row.i << ',' << row.k << ',' << row.f_i << ',' << row.f_i2 << ',' << row.f_ik
            << ',' << row.r << ',' << row.l << ',' << branch_name(row.branch) << ','
            << cell(row.frobenius_closed) << ',' << cell(row.frobenius_apery) << ','
            << cell(row.frobenius_sieve) << ',' << cell(row.genus_closed) << ','
            << cell(row.genus_apery) << ','
            << (row.skipped() ? "" : (row.agree() ? "true" : "false")) << ','
            << row.skip_reason << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<SprimeRow>& rows) {
    std::ostringstream out;
    out << "i,k,equal,complete_residues,skip_reason\n";
    for (const SprimeRow& row : rows) {
        out << row.i << ',' << row.k << ','
            << (row.skipped() ? "" : (row.equal ? "true" : "false")) << ','
            << (row.skipped() ? "" : (row.complete_residues ? "true" : "false")) << ','
            << row.skip_reason << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<ReductionRow>& rows) {
    std::ostringstream out;
    out << "i,l,F_i,F_i+1,F_l,frobenius_closed,frobenius_apery,equal,skip_reason\n";
    for (const ReductionRow& row : rows) {
        out << row.i << ',' << row.l << ',' << row.f_i << ',' << row.f_i1 << ',' << row.f_l << ','
            << cell(row.closed) << ',' << cell(row.generic) << ','
            << (row.skipped() ? "" : (row.equal ? "true" : "false")) << ',' << row.skip_reason
            << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<ArithmeticRow>& rows) {
    std::ostringstream out;
    out << "a,d,k,frobenius_formula,frobenius_apery,frobenius_sieve,agree,skip_reason\n";
    for (const ArithmeticRow& row : rows) {
        out << row.a << ',' << row.d << ',' << row.k << ',' << cell(row.formula) << ','
            << cell(row.apery) << ',' << cell(row.sieve) << ','
            << (row.skipped() ? "" : (row.agree() ? "true" : "false")) << ',' << row.skip_reason
            << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<TripleRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TripleRow& row : rows) {
        nlohmann::json obj;
        obj["i"] = row.i;
        obj["k"] = row.k;
        obj["f_i"] = json_number(row.f_i);
        obj["f_i2"] = json_number(row.f_i2);
        obj["f_ik"] = json_number(row.f_ik);
        obj["r"] = json_number(row.r);
        obj["l"] = json_number(row.l);
        obj["branch"] = branch_name(row.branch);
        put_optional(obj, "frobenius_closed", row.frobenius_closed);
        put_optional(obj, "frobenius_apery", row.frobenius_apery);
        put_optional(obj, "frobenius_sieve", row.frobenius_sieve);
        put_optional(obj, "genus_closed", row.genus_closed);
        put_optional(obj, "genus_apery", row.genus_apery);
        if (!row.skipped()) obj["agree"] = row.agree();
        if (!row.skip_reason.empty()) obj["skip_reason"] = row.skip_reason;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<SprimeRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SprimeRow& row : rows) {
        nlohmann::json obj;
        obj["i"] = row.i;
        obj["k"] = row.k;
        if (!row.skipped()) {
            obj["equal"] = row.equal;
            obj["complete_residues"] = row.complete_residues;
        } else {
            obj["skip_reason"] = row.skip_reason;
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<ReductionRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReductionRow& row : rows) {
        nlohmann::json obj;
        obj["i"] = row.i;
        obj["l"] = row.l;
        obj["f_i"] = json_number(row.f_i);
        obj["f_i1"] = json_number(row.f_i1);
        obj["f_l"] = json_number(row.f_l);
        put_optional(obj, "frobenius_closed", row.closed);
        put_optional(obj, "frobenius_apery", row.generic);
        if (!row.skipped()) obj["equal"] = row.equal;
        if (!row.skip_reason.empty()) obj["skip_reason"] = row.skip_reason;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<ArithmeticRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ArithmeticRow& row : rows) {
        nlohmann::json obj;
        obj["a"] = row.a;
        obj["d"] = row.d;
        obj["k"] = row.k;
        put_optional(obj, "frobenius_formula", row.formula);
        put_optional(obj, "frobenius_apery", row.apery);
        put_optional(obj, "frobenius_sieve", row.sieve);
        if (!row.skipped()) obj["agree"] = row.agree();
        if (!row.skip_reason.empty()) obj["skip_reason"] = row.skip_reason;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

bool all_agree(const std::vector<TripleRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const TripleRow& r) { return r.skipped() || r.agree(); });
}

bool all_agree(const std::vector<SprimeRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SprimeRow& r) {
        return r.skipped() || (r.equal && r.complete_residues);
    });
}

bool all_agree(const std::vector<ReductionRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReductionRow& r) { return r.skipped() || r.equal; });
}

bool all_agree(const std::vector<ArithmeticRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ArithmeticRow& r) { return r.skipped() || r.agree(); });
}

}  // namespace fibsemi
