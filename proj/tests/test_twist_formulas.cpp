/**
 * @file test_twist_formulas.cpp
 * @brief Closed-form twist, clasp, bubble and closure coefficients, checked against diagrams first.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/a1_skein.hpp"
#include "skein/a2_skein.hpp"
#include "skein/qcombinatorics.hpp"
#include "skein/twist_formulas.hpp"

using namespace skein;

namespace {

RationalFunction qr(long num, long den = 1, long c = 1) { return RationalFunction(LaurentPoly::q_power(num, den, c)); }

/// Two n-clasped A1 bands with k through strands.
a1::TLElement a1_basis(int n, int k) {
    a1::Sweep s(2 * n);
    s.projector(0, n);
    s.projector(n, n);
    if (n > k) {
        s.cable_cap(k, n - k);
        s.cable_cup(k, n - k);
    }
    s.projector(0, n);
    s.projector(n, n);
    return s.result();
}

}  // namespace

TEST_CASE("oracle: a colored half twist expands in the turnback basis") {
    for (int n = 1; n <= 3; ++n) {
        a1::Sweep s(2 * n);
        s.projector(0, n);
        s.projector(n, n);
        s.cable_crossing(0, n, 1);
        s.projector(0, n);
        s.projector(n, n);
        a1::TLElement rhs = s.result().scaled(0);
        for (int k = 0; k <= n; ++k) rhs += a1_basis(n, k).scaled(twist_coeff_sl2(n, k, TwistKind::Half));
        CHECK(s.result() == rhs);
    }
}

TEST_CASE("the uncolored half twist is the Kauffman relation") {
    const auto e = multi_twist_expansion_sl2(1, 1, TwistKind::Half);
    CHECK(e.coefficients.at(0) == qr(-1, 4));
    CHECK(e.coefficients.at(1) == qr(1, 4));
    const auto d = multi_twist_expansion_sl2(2, 0, TwistKind::Half);
    CHECK(d.coefficients.size() == 1);
    CHECK(d.coefficients.at(2) == RationalFunction(1));
}

TEST_CASE("left-handed coefficients are the q -> q^-1 images") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(twist_coeff_sl2(n, k, TwistKind::Full, Handed::Left) ==
                  twist_coeff_sl2(n, k, TwistKind::Full).substitute_inverse());
            CHECK(twist_coeff_sl3(n, k, TwistKind::Full, Handed::Left) ==
                  twist_coeff_sl3(n, k, TwistKind::Full).substitute_inverse());
        }
}

TEST_CASE("chain sums agree with transfer products") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m) {
            CHECK(multi_twist_expansion_sl2(n, m, TwistKind::Half) == multi_twist_expansion_sl2_transfer(n, m, TwistKind::Half));
            CHECK(multi_twist_expansion_sl2(n, m, TwistKind::Full) == multi_twist_expansion_sl2_transfer(n, m, TwistKind::Full));
            CHECK(multi_twist_expansion_sl3(n, m) == multi_twist_expansion_sl3_transfer(n, m));
        }
}

TEST_CASE("sl3 full twist at n = 1") {
    const auto e = multi_twist_expansion_sl3(1, 1);
    CHECK(e.coefficients.at(1) == qr(1, 3));
    CHECK(e.coefficients.at(0) == qr(-2, 3) * RationalFunction(LaurentPoly(1) - LaurentPoly::q_power(1)) / qr(1));
}

TEST_CASE("clasp scalars for small n") {
    CHECK(clasp_scalar(Algebra::A1, ClaspQuantity::Curl, 1) == qr(3, 4, -1));
    CHECK(clasp_scalar(Algebra::A2, ClaspQuantity::Curl, 1) == qr(4, 3));
    CHECK(clasp_scalar(Algebra::A2, ClaspQuantity::Curl, 1, 0, Handed::Left) == qr(-4, 3));
    CHECK(clasp_scalar(Algebra::A1, ClaspQuantity::Loop, 2) == RationalFunction(quantum_integer(3)));
    CHECK(clasp_scalar(Algebra::A1, ClaspQuantity::Crossing, 4, 2) == qr(1));
    CHECK(clasp_scalar(Algebra::A2, ClaspQuantity::Crossing, 3, 1) == qr(2, 3));
}

TEST_CASE("bubble coefficients: support and argument checks") {
    // k = l = 0: the bubble is the identity on [n | m]
    CHECK(bubble_coeff(Algebra::A1, 2, 3, 0, 0, 0) == RationalFunction(1));
    CHECK(bubble_coeff(Algebra::A2, 2, 2, 0, 0, 0) == RationalFunction(1));
    CHECK(bubble_coeff(Algebra::A1, 2, 2, 1, 1, 3).is_zero());
    CHECK(bubble_coeff(Algebra::A1, 2, 2, 1, 0, 0).is_zero());
    CHECK_THROWS_AS(bubble_coeff(Algebra::A1, 2, 2, 3, 0, 3), OutOfRange);
    CHECK_THROWS_AS(bubble_coeff(Algebra::A2, -1, 2, 0, 0, 0), OutOfRange);
}

TEST_CASE("oracle: closure scalars") {
    // closing the A1 basis element with k through strands, relative to the closed n-clasp
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            a1::Sweep s;
            s.cable_cup(0, n);
            s.projector(0, n);
            if (n > k) {
                s.cable_cap(k, n - k);
                s.cable_cup(k, n - k);
            }
            s.projector(0, n);
            s.projector(n, n);
            s.cable_cap(0, n);
            const RationalFunction loop = clasp_scalar(Algebra::A1, ClaspQuantity::Loop, n);
            CHECK(s.closed_value() == loop * closure_scalar(Algebra::A1, n, k));
        }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(twist_coeff_sl2(2, 3, TwistKind::Half), OutOfRange);
    CHECK_THROWS_AS(twist_coeff_sl2(2, 1, TwistKind::HalfPos), std::invalid_argument);
    CHECK_THROWS_AS(multi_twist_expansion_sl2(-1, 1, TwistKind::Full), OutOfRange);
}
