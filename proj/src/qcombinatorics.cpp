/**
 * @file qcombinatorics.cpp
 * @brief q-analog combinatorics with memoized factorial-type products.
 */
#include "skein/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace skein {

namespace {

/// Thread-safe growable table of prefix products f(0..k).
class PrefixProducts {
public:
    explicit PrefixProducts(LaurentPoly (*factor)(long)) : factor_(factor) {}

    LaurentPoly get(long k) {
        if (k < 0) throw std::invalid_argument("negative index in q-factorial");
        std::lock_guard<std::mutex> lock(mu_);
        if (table_.empty()) table_.emplace_back(1);
        while (static_cast<long>(table_.size()) <= k) {
            const long l = static_cast<long>(table_.size());
            table_.push_back(table_.back() * factor_(l));
        }
        return table_[static_cast<std::size_t>(k)];
    }

private:
    LaurentPoly (*factor_)(long);
    std::vector<LaurentPoly> table_;
    std::mutex mu_;
};

LaurentPoly one_minus_q_pow(long l) { return LaurentPoly(1) - q_pow(l); }

PrefixProducts& poch_table() {
    static PrefixProducts t(&one_minus_q_pow);
    return t;
}

PrefixProducts& brace_table() {
    static PrefixProducts t(&quantum_brace);
    return t;
}

PrefixProducts& qint_table() {
    static PrefixProducts t(&quantum_integer);
    return t;
}

void enumerate_partitions(long rows, long max_part, long weight, std::map<long, long>& acc) {
    ++acc[weight];  // the partition with no further parts
    if (rows == 0) return;
    for (long p = 1; p <= max_part; ++p) enumerate_partitions(rows - 1, p, weight + p, acc);
}

}  // namespace

LaurentPoly q_pow(long num, long den) { return LaurentPoly::q_power(num, den); }

LaurentPoly quantum_brace(long k) { return q_pow(k, 2) - q_pow(-k, 2); }

LaurentPoly quantum_integer(long k) {
    if (k == 0) return {};
    return exact_div(quantum_brace(k), quantum_brace(1));
}

std::pair<LaurentPoly, LaurentPoly> quantum_factorials(long k) {
    return {brace_table().get(k), qint_table().get(k)};
}

LaurentPoly pochhammer(long k) { return poch_table().get(k); }

LaurentPoly gauss_binomial(long n, long k) {
    if (k < 0 || k > n) return {};
    return exact_div(pochhammer(n), pochhammer(k) * pochhammer(n - k));
}

LaurentPoly bracket_binomial(long n, long k) {
    if (k < 0 || k > n) return {};
    return exact_div(qint_table().get(n), qint_table().get(k) * qint_table().get(n - k));
}

LaurentPoly gauss_multinomial(long n, const std::vector<long>& parts) {
    long total = std::accumulate(parts.begin(), parts.end(), 0L);
    if (total != n) throw PartsMismatch("multinomial parts do not sum to n");
    LaurentPoly den(1);
    for (long p : parts) {
        if (p < 0) return {};
        den *= pochhammer(p);
    }
    return exact_div(pochhammer(n), den);
}

LaurentPoly partition_box_sum(long k, long l) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative box size");
    std::map<long, long> acc;
    enumerate_partitions(k, l, 0, acc);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [w, c] : acc) terms.emplace_back(t_exponent(w), BigInt(c));
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace skein
