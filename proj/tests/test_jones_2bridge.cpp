/**
 * @file test_jones_2bridge.cpp
 * @brief 2-bridge colored Jones polynomials: parsing, closed formulas versus the oracles.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/a1_skein.hpp"
#include "skein/a2_skein.hpp"
#include "skein/jones_2bridge.hpp"

using namespace skein;

TEST_CASE("parsing link specifications") {
    CHECK(parse_spec("2,-2") == TwoBridgeSpec({1, -1}));
    CHECK(parse_spec("[4, 2]") == TwoBridgeSpec({2, 1}));
    CHECK(parse_spec("1,-1", SpecInput::TwistParameters) == TwoBridgeSpec({1, -1}));
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("3"), ParseError);
    CHECK_THROWS_AS(parse_spec("2,0"), ParseError);
    CHECK_THROWS_AS(parse_spec("2,x"), ParseError);
    CHECK_THROWS_AS(parse_spec("2,,2"), ParseError);
}

TEST_CASE("writhe, components and mirror") {
    CHECK(writhe(TwoBridgeSpec({1, -1})) == 0);
    CHECK(writhe(TwoBridgeSpec({2})) == -4);
    CHECK(component_count(TwoBridgeSpec({1})) == 2);
    CHECK(component_count(TwoBridgeSpec({1, 1})) == 1);
    CHECK(mirror(TwoBridgeSpec({1, -2})) == TwoBridgeSpec({-1, 2}));
}

TEST_CASE("color zero is the trivial invariant") {
    for (Algebra alg : {Algebra::A1, Algebra::A2}) CHECK(colored_jones(alg, TwoBridgeSpec({1, -1}), 0).polynomial == LaurentPoly(1));
}

TEST_CASE("oracle agreement on small diagrams") {
    const std::vector<TwoBridgeSpec> specs = {TwoBridgeSpec({1}), TwoBridgeSpec({-1}), TwoBridgeSpec({1, -1}), TwoBridgeSpec({1, 1})};
    for (const auto& s : specs) {
        for (int n = 0; n <= 2; ++n) {
            CAPTURE(s.to_string());
            CAPTURE(n);
            CHECK(colored_jones(Algebra::A1, s, n).polynomial == as_laurent(a1::oracle_bracket_two_bridge_sl2(s, n)));
        }
        for (int n = 0; n <= 1; ++n)
            CHECK(colored_jones(Algebra::A2, s, n).polynomial == as_laurent(a2::oracle_bracket_two_bridge_sl3(s, n)));
    }
}

TEST_CASE("region transfers: chain sum equals repeated transfers") {
    for (Algebra alg : {Algebra::A1, Algebra::A2})
        for (int n = 0; n <= 4; ++n)
            for (int K = 0; K <= n; ++K)
                for (long a : {1L, -1L, 3L, -2L}) CHECK(region_transfer_chain(alg, n, K, a) == region_transfer_matrix(alg, n, K, a));
    CHECK_THROWS_AS(region_transfer(Algebra::A1, 2, 3, 1), OutOfRange);
    CHECK_THROWS_AS(region_transfer(Algebra::A1, 2, 1, 0), OutOfRange);
}

TEST_CASE("framing bookkeeping") {
    const auto r = colored_jones(Algebra::A1, TwoBridgeSpec({1}), 1);
    CHECK(r.writhe == -2);
    CHECK(r.components == 2);
    CHECK(framing_factor(Algebra::A1, 1, -2) == LaurentPoly::q_power(3, 2));
    CHECK(framing_factor(Algebra::A2, 1, 1) == LaurentPoly::q_power(-4, 3));
}

TEST_CASE("mirror images are related by q -> q^-1") {
    const TwoBridgeSpec s({2, -1, 1});
    for (Algebra alg : {Algebra::A1, Algebra::A2})
        for (int n = 0; n <= 4; ++n)
            CHECK(colored_jones(alg, mirror(s), n).polynomial == colored_jones(alg, s, n).polynomial.substitute_inverse());
}

TEST_CASE("algebra names") {
    CHECK(algebra_from_name("sl2") == Algebra::A1);
    CHECK(algebra_from_name("sl3") == Algebra::A2);
    CHECK_THROWS_AS(algebra_from_name("sl4"), ParseError);
}
