/**
 * @file test_json_roundtrip.cpp
 * @brief JSON serialization round-trips and deterministic output for every result type.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/jones_2bridge.hpp"
#include "skein/twist_formulas.hpp"
#include "skein/verify.hpp"

using namespace skein;

TEST_CASE("Laurent polynomials and rational functions") {
    const LaurentPoly p = LaurentPoly::q_power(-7, 4, 3) - LaurentPoly::q_power(2, 3) + LaurentPoly(5);
    CHECK(laurent_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    const RationalFunction r(p, LaurentPoly(1) + LaurentPoly::q_power(1));
    CHECK(rational_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    CHECK_THROWS(laurent_from_json(nlohmann::json{{"var", "x"}, {"terms", nlohmann::json::array()}}));
}

TEST_CASE("twist expansions") {
    const TwistExpansion e = multi_twist_expansion_sl2(3, 2, TwistKind::Full, Handed::Left);
    CHECK(twist_expansion_from_json(nlohmann::json::parse(to_json(e).dump())) == e);
    CHECK(to_json(e).dump() == to_json(multi_twist_expansion_sl2(3, 2, TwistKind::Full, Handed::Left)).dump());
}

TEST_CASE("Jones results") {
    for (Algebra alg : {Algebra::A1, Algebra::A2}) {
        const JonesResult r = colored_jones(alg, TwoBridgeSpec({2, -1}), 2);
        const auto j = to_json(r);
        CHECK(jones_result_from_json(nlohmann::json::parse(j.dump())) == r);
        CHECK(j.dump() == to_json(colored_jones(alg, TwoBridgeSpec({2, -1}), 2)).dump());
        CHECK(j.at("spec") == nlohmann::json::array({2, -1}));
        CHECK(j.at("algebra") == algebra_name(alg));
    }
}

TEST_CASE("verification reports") {
    verify::VerifyOptions o;
    o.max_n = 3;
    const auto r = verify::run_suite("qident", o);
    CHECK(r.passed());
    const auto j = to_json(r);
    CHECK(j.at("suite") == "qident");
    CHECK(j.at("checks").size() == r.checks.size());
    CHECK_THROWS_AS(verify::run_suite("nope"), std::invalid_argument);
}
