/**
 * @file test_laurent.cpp
 * @brief Exact Laurent polynomials in t = q^{1/12} and canonical rational functions.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/laurent.hpp"

using namespace skein;

namespace {
LaurentPoly q(long num, long den = 1) { return LaurentPoly::q_power(num, den); }
}  // namespace

TEST_CASE("fractional powers of q are integral powers of t") {
    CHECK(q(1, 4) == LaurentPoly::monomial(3));
    CHECK(q(1, 3) == LaurentPoly::monomial(4));
    CHECK(q(-1, 6) == LaurentPoly::monomial(-2));
    CHECK(t_exponent(5, 2) == 30);
    CHECK_THROWS(t_exponent(1, 5));
}

TEST_CASE("ring arithmetic agrees with hand expansion") {
    const LaurentPoly one(1);
    CHECK((one + q(1)) * (one - q(1)) == one - q(2));
    CHECK((q(1, 2) - q(-1, 2)).pow(2) == q(1) - LaurentPoly(2) + q(-1));
    CHECK((q(1) - q(1)).is_zero());
    CHECK(q(3, 4).substitute_inverse() == q(-3, 4));
    const LaurentPoly p = LaurentPoly(3) * q(2) - q(-1, 3) + LaurentPoly(7);
    CHECK(p.substitute_inverse().substitute_inverse() == p);
    CHECK(p.eval_at_one() == 9);
}

TEST_CASE("exact division and its failure mode") {
    const LaurentPoly one(1);
    CHECK(exact_div(one - q(3), one - q(1)) == one + q(1) + q(2));
    CHECK_THROWS_AS(exact_div(one + q(1), one - q(1)), NotDivisible);
    CHECK_THROWS(exact_div(one, LaurentPoly()));
}

TEST_CASE("rational functions are kept canonical") {
    const LaurentPoly one(1);
    const RationalFunction r(one - q(2), one - q(1));
    CHECK(r.is_polynomial());
    CHECK(r == RationalFunction(one + q(1)));
    const RationalFunction s(one, one - q(1));
    CHECK_FALSE(s.is_polynomial());
    CHECK((s * RationalFunction(one - q(1))) == RationalFunction(1));
    CHECK(s.substitute_inverse().substitute_inverse() == s);
    CHECK(RationalFunction(q(1), q(1, 3)) == RationalFunction(q(2, 3)));
}

TEST_CASE("as_laurent is a polynomiality tripwire") {
    const LaurentPoly one(1);
    CHECK(as_laurent(RationalFunction(one - q(4), one - q(2))) == one + q(2));
    CHECK(as_laurent(RationalFunction(q(1, 2), q(1, 4))) == q(1, 4));
    CHECK_THROWS_AS(as_laurent(RationalFunction(one, one + q(1))), NotPolynomial);
}

TEST_CASE("printing uses reduced fractional exponents of q") {
    CHECK((q(-1) + LaurentPoly(1) + q(1)).to_string() == "q^-1 + 1 + q");
    CHECK((LaurentPoly() - q(1, 2) - q(5, 2)).to_string() == "-q^(1/2) - q^(5/2)");
    CHECK(LaurentPoly().to_string() == "0");
}
