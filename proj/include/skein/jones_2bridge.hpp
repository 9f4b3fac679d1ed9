/**
 * @file jones_2bridge.hpp
 * @brief Colored sl2 and sl3 Jones polynomials of 2-bridge links [2a_1, ..., 2a_l].
 *
 * The closed formulas propagate a weight vector over the label K in [0, n]
 * (the number of strands passing through the middle of the diagram) through one
 * transfer per twist region, starting from K = n, and finish with the closure
 * scalar and the framing correction.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "skein/laurent.hpp"
#include "skein/twist_formulas.hpp"
#include "skein/two_bridge_spec.hpp"

namespace skein {

/// Two independent evaluations of the same quantity disagreed.
struct InternalMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

/// How parse_spec interprets the numbers it reads.
enum class SpecInput {
    CrossingCounts,  ///< "2a_1,2a_2,...": even entries, halved on input
    TwistParameters  ///< "a_1,a_2,...": the a_j themselves
};

/**
 * @brief Parse a comma-separated list (optionally wrapped in brackets).
 * @throws ParseError on empty input, junk, zero entries or (for crossing counts) odd entries.
 */
TwoBridgeSpec parse_spec(const std::string& text, SpecInput mode = SpecInput::CrossingCounts);

/// Writhe of the oriented standard diagram: -2 (a_1 + ... + a_l).
long writhe(const TwoBridgeSpec& spec);

/// Number of components (1 or 2) of the closed diagram.
int component_count(const TwoBridgeSpec& spec);

/// Negate every a_j.
TwoBridgeSpec mirror(const TwoBridgeSpec& spec);

/**
 * @brief Weight carried by one twist region with 2|a| crossings from label K to each K'.
 *
 * alg = A1 gives the sl2 weights, A2 the sl3 weights. The value is the closed
 * chain sum; it is recomputed by |a| triangular matrix applications and an
 * InternalMismatch is thrown if the two disagree.
 */
std::map<int, RationalFunction> region_transfer(Algebra alg, int n, int K, long a);

/// Region weights by the chain formula only (no cross-check).
std::map<int, RationalFunction> region_transfer_chain(Algebra alg, int n, int K, long a);

/// Region weights by repeated triangular transfers only.
std::map<int, RationalFunction> region_transfer_matrix(Algebra alg, int n, int K, long a);

struct JonesResult {
    Algebra algebra = Algebra::A1;
    int n = 0;
    TwoBridgeSpec spec{{1}};
    long writhe = 0;
    int components = 0;
    /// The framing factor multiplied in, as an exponent of t = q^{1/12} (sign in framing_sign).
    long framing_exponent_applied = 0;
    int framing_sign = 1;
    LaurentPoly polynomial;

    friend bool operator==(const JonesResult& x, const JonesResult& y) {
        return x.algebra == y.algebra && x.n == y.n && x.spec == y.spec && x.writhe == y.writhe &&
               x.components == y.components && x.framing_exponent_applied == y.framing_exponent_applied &&
               x.framing_sign == y.framing_sign && x.polynomial == y.polynomial;
    }
};

/**
 * @brief J_{n+1}^{sl2} (alg = A1) or J_{(n,0)}^{sl3} (alg = A2) of the given diagram.
 * @throws NotPolynomial if the result is not a Laurent polynomial (never expected).
 */
JonesResult colored_jones(Algebra alg, const TwoBridgeSpec& spec, int n);

/// The normalized invariant before the polynomiality check (for diagnostics).
RationalFunction colored_jones_rational(Algebra alg, const TwoBridgeSpec& spec, int n);

/// Framing factor ((-1)^n q^{(n^2+2n)/4})^{-w} (A1) or (q^{(n^2+3n)/3})^{-w} (A2).
LaurentPoly framing_factor(Algebra alg, int n, long writhe);

const char* algebra_name(Algebra alg);  // "sl2" / "sl3"
Algebra algebra_from_name(const std::string& name);

nlohmann::json to_json(const JonesResult& r);
JonesResult jones_result_from_json(const nlohmann::json& j);

}  // namespace skein
