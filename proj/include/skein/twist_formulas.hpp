/**
 * @file twist_formulas.hpp
 * @brief Closed-form coefficients of colored twist, clasp, slide, bubble and closure relations.
 *
 * Basis conventions (sweep frame, two n-clasped bands side by side):
 *   basis_k = clasps o (id_k (x) cup_{n-k} (x) id_k) o (id_k (x) cap_{n-k} (x) id_k) o clasps,
 * i.e. k strands pass straight through each band and n-k strands turn back.
 * "Right-handed" twists are the ones whose elementary crossings have the
 * bottom-left-to-top-right strand over; left-handed coefficients are obtained by
 * substituting q^{-1} for q.
 */
#pragma once

#include <map>
#include <vector>

#include "json.hpp"
#include "skein/common.hpp"
#include "skein/laurent.hpp"

namespace skein {

enum class Algebra { A1, A2 };
enum class TwistKind { Half, Full, HalfPos, HalfNeg };
enum class Handed { Right, Left };
enum class ClaspQuantity { Crossing, PartialTrace, Curl, Loop };

/**
 * @brief Expansion of a twisted clasped element in the basis indexed by k in [0, n].
 */
struct TwistExpansion {
    int n = 0;
    std::map<int, RationalFunction> coefficients;

    friend bool operator==(const TwistExpansion& x, const TwistExpansion& y) {
        return x.n == y.n && x.coefficients == y.coefficients;
    }
};

nlohmann::json to_json(const TwistExpansion& e);
TwistExpansion twist_expansion_from_json(const nlohmann::json& j);

/// Single colored twist coefficient for A1: kind is Half or Full. Throws OutOfRange.
RationalFunction twist_coeff_sl2(int n, int k, TwistKind kind, Handed handed = Handed::Right);

/**
 * @brief m half twists (kind=Half) or m full twists (kind=Full) of two n-clasped A1 bands.
 *
 * Evaluates the closed chain-sum formula: for every chain n = k_0 >= k_1 >= ... >= k_m,
 * the summand is accumulated into the coefficient of basis_{k_m}.
 */
TwistExpansion multi_twist_expansion_sl2(int n, int m, TwistKind kind, Handed handed = Handed::Right);

/**
 * @brief The same expansion computed by m successive triangular transfers
 * (one twist at a time, dressed with slide scalars). Independent of the chain formula.
 */
TwistExpansion multi_twist_expansion_sl2_transfer(int n, int m, TwistKind kind, Handed handed = Handed::Right);

/// Single colored twist coefficient for A2: HalfPos, HalfNeg or Full. Throws OutOfRange.
RationalFunction twist_coeff_sl3(int n, int k, TwistKind kind, Handed handed = Handed::Right);

/// m full twists of two antiparallel n-clasped A2 bands (closed chain formula).
TwistExpansion multi_twist_expansion_sl3(int n, int m, Handed handed = Handed::Right);

/// Same expansion via m triangular transfers dressed with A2 slide scalars.
TwistExpansion multi_twist_expansion_sl3_transfer(int n, int m, Handed handed = Handed::Right);

/**
 * @brief Clasp absorption scalars.
 *
 * Crossing: k strands crossing n-k strands into one clasp, q^{+-k(n-k)/4} (A1) or /3 (A2).
 * PartialTrace: closing k strands of an n-clasp, (-1)^k[n+1]/[n-k+1] (A1) or
 * [n+1][n+2]/([n-k+1][n-k+2]) (A2). Curl: a colored kink, (-1)^n q^{(n^2+2n)/4} (A1)
 * or q^{(n^2+3n)/3} (A2), inverted for left-handed. Loop: the closed clasp value.
 */
RationalFunction clasp_scalar(Algebra alg, ClaspQuantity which, int n, int k = 0, Handed handed = Handed::Right);

/// Scalar for sliding an (n-k)-turnback of two n-clasped bands through one half twist.
RationalFunction slide_scalar(Algebra alg, int n, int k);

/**
 * @brief Coefficient of the t-th basis element in the bubble expansion.
 *
 * Valid for 0 <= k, l <= min(n, m); returns 0 when t lies outside
 * [max(k,l), min(k+l, n, m)]. Throws OutOfRange on malformed (n, m, k, l).
 */
RationalFunction bubble_coeff(Algebra alg, int n, int m, int k, int l, int t);

/// Ratio of a closed, partially turned-back n-clasp loop (k through strands) to the n-loop.
RationalFunction closure_scalar(Algebra alg, int n, int k);

}  // namespace skein
