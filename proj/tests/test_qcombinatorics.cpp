/**
 * @file test_qcombinatorics.cpp
 * @brief Quantum integers, q-Pochhammer symbols and q-binomials against direct definitions.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/qcombinatorics.hpp"

using namespace skein;

namespace {

/// [k] as the symmetric sum q^{(k-1)/2} + q^{(k-3)/2} + ... + q^{-(k-1)/2}.
LaurentPoly quantum_integer_by_sum(long k) {
    LaurentPoly s;
    for (long i = 0; i < k; ++i) s += q_pow(k - 1 - 2 * i, 2);
    return s;
}

/// (n choose k)_q by the q-Pascal recurrence.
LaurentPoly gauss_by_pascal(long n, long k) {
    if (k < 0 || k > n) return LaurentPoly();
    if (k == 0 || k == n) return LaurentPoly(1);
    return gauss_by_pascal(n - 1, k - 1) + q_pow(k) * gauss_by_pascal(n - 1, k);
}

}  // namespace

TEST_CASE("quantum integers match the symmetric sum") {
    for (long k = 0; k <= 12; ++k) {
        CHECK(quantum_integer(k) == quantum_integer_by_sum(k));
        CHECK(quantum_integer(-k) == -quantum_integer(k));
    }
    CHECK(quantum_integer(3) == q_pow(-1) + LaurentPoly(1) + q_pow(1));
    CHECK(quantum_brace(2) == q_pow(1) - q_pow(-1));
}

TEST_CASE("q-Pochhammer symbols") {
    const LaurentPoly one(1);
    CHECK(pochhammer(0) == one);
    CHECK(pochhammer(3) == (one - q_pow(1)) * (one - q_pow(2)) * (one - q_pow(3)));
}

TEST_CASE("Gauss binomials satisfy q-Pascal and count partitions in a box") {
    for (long n = 0; n <= 9; ++n)
        for (long k = -1; k <= n + 1; ++k) CHECK(gauss_binomial(n, k) == gauss_by_pascal(n, k));
    for (long k = 0; k <= 5; ++k)
        for (long l = 0; l <= 5; ++l) CHECK(partition_box_sum(k, l) == gauss_binomial(k + l, k));
    // 2x2 box: partitions of sizes 0,1,2,2,3,4
    CHECK(partition_box_sum(2, 2) == LaurentPoly(1) + q_pow(1) + LaurentPoly(2) * q_pow(2) + q_pow(3) + q_pow(4));
}

TEST_CASE("bracket binomials are symmetric under q -> q^-1") {
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(bracket_binomial(n, k) == bracket_binomial(n, k).substitute_inverse());
            CHECK(bracket_binomial(n, k) == bracket_binomial(n, n - k));
        }
    const auto [brace, bracket] = quantum_factorials(3);
    CHECK(bracket == quantum_integer(1) * quantum_integer(2) * quantum_integer(3));
    CHECK(brace == quantum_brace(1) * quantum_brace(2) * quantum_brace(3));
}

TEST_CASE("q-multinomials") {
    CHECK(gauss_multinomial(4, {1, 3}) == gauss_binomial(4, 1));
    CHECK(gauss_multinomial(5, {2, 2, 1}) == gauss_binomial(5, 2) * gauss_binomial(3, 2));
    CHECK(gauss_multinomial(0, {0, 0}) == LaurentPoly(1));
    CHECK_THROWS_AS(gauss_multinomial(4, {1, 1}), PartsMismatch);
}
