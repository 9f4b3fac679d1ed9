/**
 * @file test_a1_skein.cpp
 * @brief Temperley-Lieb diagrams, Kauffman bracket relations and Jones-Wenzl projectors.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/a1_skein.hpp"
#include "skein/qcombinatorics.hpp"

using namespace skein;
using namespace skein::a1;

namespace {
const RationalFunction kLoop = RationalFunction(-quantum_integer(2));
}

TEST_CASE("a closed loop is -[2]") {
    Sweep s;
    s.cup(0);
    s.cap(0);
    CHECK(s.closed_value() == kLoop);
    CHECK_THROWS_AS(Sweep(2).closed_value(), NotClosed);
}

TEST_CASE("e_i^2 = -[2] e_i and the Reidemeister II move") {
    const TLElement e = TLElement::hook(2, 0);
    CHECK(tl_compose(e, e) == e.scaled(kLoop));
    CHECK(tl_compose(crossing_expand(1), crossing_expand(-1)) == TLElement::identity(2));
}

TEST_CASE("Reidemeister III holds for the expanded crossings") {
    Sweep a(3), b(3);
    for (int p : {0, 1, 0}) a.crossing(p, 1);
    for (int p : {1, 0, 1}) b.crossing(p, 1);
    CHECK(a.result() == b.result());
}

TEST_CASE("a positive kink is -q^{3/4}") {
    Sweep s(1);
    s.cup(1);
    s.crossing(0, 1);
    s.cap(1);
    CHECK(s.result() == TLElement::identity(1).scaled(RationalFunction(LaurentPoly::q_power(3, 4, -1))));
}

TEST_CASE("Jones-Wenzl projectors") {
    const TLElement f2 = jones_wenzl(2);
    CHECK(f2 == TLElement::identity(2) + TLElement::hook(2, 0).scaled(RationalFunction(LaurentPoly(1), quantum_integer(2))));
    for (int n = 1; n <= 4; ++n) {
        const TLElement f = jones_wenzl(n);
        CHECK(tl_compose(f, f) == f);
        for (int i = 0; i + 1 < n; ++i) CHECK(tl_apply(f, TLElement::cap(), i).is_zero());
        Sweep s;
        s.cable_cup(0, n);
        s.projector(0, n);
        s.cable_cap(0, n);
        CHECK(s.closed_value() == RationalFunction(LaurentPoly(n % 2 ? -1 : 1) * quantum_integer(n + 1)));
    }
}

TEST_CASE("composition words evaluate like the sweep builder") {
    CompositionWord w;
    w.domain = 0;
    w.layers = {{{Gen::Cup, 1}}, {{Gen::Identity, 1}, {Gen::Cup, 1}, {Gen::Identity, 1}},
                {{Gen::Projector, 2}, {Gen::Identity, 2}}, {{Gen::Identity, 1}, {Gen::Cap, 1}, {Gen::Identity, 1}},
                {{Gen::Cap, 1}}};
    CHECK(evaluate_closed_sl2(w) == RationalFunction(quantum_integer(3)));
    CompositionWord bad;
    bad.domain = 2;
    bad.layers = {{{Gen::Identity, 3}}};
    CHECK_THROWS_AS(bad.codomain(), SizeMismatch);
}

TEST_CASE("the Hopf-link diagram [2] has bracket-normalized invariant -q^{1/2} - q^{5/2}") {
    const auto j = oracle_bracket_two_bridge_sl2(TwoBridgeSpec({1}), 1);
    CHECK(j == RationalFunction(LaurentPoly() - LaurentPoly::q_power(1, 2) - LaurentPoly::q_power(5, 2)));
    CHECK(oracle_bracket_two_bridge_sl2(TwoBridgeSpec({1, -1}), 0) == RationalFunction(1));
}

TEST_CASE("the term cap raises ResourceLimit") {
    CHECK_THROWS_AS(oracle_raw_bracket_two_bridge_sl2(TwoBridgeSpec({1, 1}), 2, 3), ResourceLimit);
}
