/**
 * @file test_a2_skein.cpp
 * @brief sl3 webs: reduction relations, crossings, clasps and colored vertices.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/a2_skein.hpp"
#include "skein/qcombinatorics.hpp"

using namespace skein;
using namespace skein::a2;

namespace {
RationalFunction qi(long k) { return RationalFunction(quantum_integer(k)); }
}  // namespace

TEST_CASE("a closed loop is [3], in either orientation") {
    for (int o : {1, -1}) {
        Sweep s;
        s.cup(0, o);
        s.cap(0);
        CHECK(s.closed_value() == qi(3));
    }
}

TEST_CASE("bigon removal gives [2] times a strand") {
    // split followed by merge on one upward strand
    auto x = WebElement::from_web(split_web(1));
    x = web_apply(x, WebElement::from_web(merge_web(-1)), 0);
    CHECK(x == WebElement::identity({1}).scaled(qi(2)));
}

TEST_CASE("square removal: an I-web stacked on its rotation") {
    // two rungs between antiparallel strands bound a square; its two smoothings are the
    // identity and the cap-cup
    // (an I-web replaces a crossing, so it swaps the boundary orientations)
    const auto ii = web_compose(WebElement::from_web(i_web(1, -1)), WebElement::from_web(i_web(-1, 1)));
    auto hook = WebElement::from_web(cap_web(1));
    hook = web_compose(hook, WebElement::from_web(cup_web(1)));
    CHECK(ii == WebElement::identity({1, -1}) + hook);
}

TEST_CASE("crossing relations") {
    // Reidemeister II for parallel and antiparallel strands
    for (auto o : std::vector<Orientation>{{1, 1}, {1, -1}, {-1, 1}}) {
        Sweep s(o);
        s.crossing(0, 1);
        s.crossing(0, -1);
        CHECK(s.result() == WebElement::identity(o));
    }
    // the positive kink is q^{4/3}
    Sweep k({1});
    k.cup(1, 1);
    k.crossing(0, 1);
    k.cap(1);
    CHECK(k.result() == WebElement::identity({1}).scaled(RationalFunction(LaurentPoly::q_power(4, 3))));
    CHECK(crossing_sign(1, 1, 1) == 1);
    CHECK(crossing_sign(-1, 1, 1) == -1);
}

TEST_CASE("Reidemeister III for upward strands") {
    Sweep a({1, 1, 1}), b({1, 1, 1});
    for (int p : {0, 1, 0}) a.crossing(p, 1);
    for (int p : {1, 0, 1}) b.crossing(p, 1);
    CHECK(a.result() == b.result());
}

TEST_CASE("clasps are idempotent and close to [n+1][n+2]/[2]") {
    for (int n = 1; n <= 3; ++n) {
        const auto f = a2_clasp(n, 1);
        CHECK(web_compose(f, f) == f);
        Sweep s;
        s.cable_cup(0, n, 1);
        s.clasp(0, n);
        s.cable_cap(0, n);
        CHECK(s.closed_value() == qi(n + 1) * qi(n + 2) / qi(2));
    }
}

TEST_CASE("reduction order does not matter") {
    // close every term of the 2-clasp into a raw web and reduce it in several random orders
    WebBuilder cb({}, {1, 1, -1, -1}), kb({1, 1, -1, -1}, {});
    for (int i = 0; i < 2; ++i) {
        cb.connect(cb.top_point(i), cb.top_point(3 - i));
        kb.connect(kb.bottom_point(i), kb.bottom_point(3 - i));
    }
    const Web cups = cb.build(), caps = kb.build();
    const auto f = a2_clasp(2, 1);
    for (const auto& [key, entry] : f.terms()) {
        int l1 = 0, l2 = 0;
        const Web closed = web_glue(web_glue(cups, web_juxtapose(entry.web, identity_web({-1, -1})), l1), caps, l2);
        const RationalFunction v = web_reduce_closed(closed);
        for (unsigned seed = 1; seed <= 8; ++seed) CHECK(web_reduce_closed_shuffled(closed, seed) == v);
    }
}

TEST_CASE("the web builder rejects inconsistent degrees") {
    WebBuilder b({1}, {-1, -1});
    const int v = b.add_vertex(VKind::Sink, 0.5, 0.5);
    b.connect(b.bottom_point(0), v);
    b.connect(v, b.top_point(0));
    CHECK_THROWS(b.build());
}

TEST_CASE("colored vertices have the expected boundary") {
    const auto v = colored_vertex(VertexKind::Trivalent, 2);
    CHECK(v.bottom() == Orientation{1, 1});
    CHECK(v.top() == Orientation{-1, -1, -1, -1});
    const auto x = colored_vertex(VertexKind::Quadrivalent, 1, 2);
    CHECK(x.bottom() == Orientation{1, 1, 1});
    CHECK(reverse(rotate180(v)).bottom() == Orientation{-1, -1, -1, -1});
}

TEST_CASE("sl3 oracle spot values") {
    CHECK(oracle_bracket_two_bridge_sl3(TwoBridgeSpec({1}), 0) == RationalFunction(1));
    CHECK(oracle_bracket_two_bridge_sl3(TwoBridgeSpec({1}), 1) ==
          RationalFunction(LaurentPoly::q_power(1) + LaurentPoly::q_power(3) + LaurentPoly::q_power(4)));
    CHECK(template_writhe(TwoBridgeSpec({1, -1})) == 0);
    CHECK(template_writhe(TwoBridgeSpec({2})) == -4);
}
