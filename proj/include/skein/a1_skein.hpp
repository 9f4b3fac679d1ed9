/**
 * @file a1_skein.hpp
 * @brief Brute-force Kauffman bracket oracle: Temperley-Lieb diagrams, Jones-Wenzl
 *        projectors, crossing expansion and closed evaluation of composition words.
 *
 * Diagrams are drawn in a "sweep" frame: strands run upward, the domain is the
 * bottom edge and the codomain the top edge. A planar matching on a bottom and
 * b top points stores the partner of every point; points are numbered
 * 0..a-1 along the bottom (left to right) and a..a+b-1 along the top (left to right).
 *
 * Conventions: loop = -[2]; crossing(+) is the crossing whose over-strand runs from
 * bottom-left to top-right, and expands as q^{1/4} id + q^{-1/4} e.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/common.hpp"
#include "skein/laurent.hpp"
#include "skein/two_bridge_spec.hpp"

namespace skein::a1 {

/**
 * @brief A crossingless matching between a bottom and b top points.
 *
 * partner[i] is the point paired with i; stored as bytes so it can key hash maps.
 */
struct PlanarMatching {
    int a = 0;
    int b = 0;
    std::string partner;

    /// Checks the involution and non-crossing conditions.
    bool valid() const;
    friend bool operator==(const PlanarMatching& x, const PlanarMatching& y) {
        return x.a == y.a && x.b == y.b && x.partner == y.partner;
    }
};

/**
 * @brief A finite linear combination of planar matchings a -> b.
 */
class TLElement {
public:
    using Terms = std::unordered_map<std::string, RationalFunction>;

    TLElement(int a, int b) : a_(a), b_(b) {}

    static TLElement identity(int n);
    /// The empty diagram 0 -> 0 with coefficient c.
    static TLElement scalar(const RationalFunction& c);
    static TLElement from_matching(const PlanarMatching& m, const RationalFunction& c = 1);
    /// 0 -> 2 arc.
    static TLElement cup();
    /// 2 -> 0 arc.
    static TLElement cap();
    /// Hook e_i on n strands (strands i, i+1 capped below and cupped above), 0-based i.
    static TLElement hook(int n, int i);
    /// 0 -> 2n nested arcs (n-cabled cup).
    static TLElement cable_cup(int n);
    /// 2n -> 0 nested arcs (n-cabled cap).
    static TLElement cable_cap(int n);

    int domain() const { return a_; }
    int codomain() const { return b_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const std::string& partner, const RationalFunction& c);
    RationalFunction coefficient(const PlanarMatching& m) const;
    /// For 0 -> 0 elements: the coefficient of the empty diagram.
    RationalFunction scalar_value() const;

    TLElement scaled(const RationalFunction& c) const;
    TLElement& operator+=(const TLElement& o);
    TLElement& operator-=(const TLElement& o);
    friend TLElement operator+(TLElement x, const TLElement& y) { return x += y; }
    friend TLElement operator-(TLElement x, const TLElement& y) { return x -= y; }
    friend bool operator==(const TLElement& x, const TLElement& y);

private:
    int a_, b_;
    Terms terms_;
};

/**
 * @brief Stack g on top of f (f: a -> b, g: b -> c), giving g o f : a -> c.
 *
 * Each closed loop contributes -[2]. Throws SizeMismatch when codomain(f) != domain(g)
 * and ResourceLimit when the result exceeds max_terms matchings.
 */
TLElement tl_compose(const TLElement& f, const TLElement& g, std::size_t max_terms = kDefaultMaxTerms);

/// Place f to the left of g.
TLElement tl_tensor(const TLElement& f, const TLElement& g);

/// Apply the local element g (k -> k') to the top points p..p+k-1 of f.
TLElement tl_apply(const TLElement& f, const TLElement& g, int p, std::size_t max_terms = kDefaultMaxTerms);

/// The Jones-Wenzl projector on n strands (cached, exact coefficients).
TLElement jones_wenzl(int n);

/**
 * @brief An integral multiple D * f_n of the projector together with D.
 *
 * All coefficients of the returned element are Laurent polynomials, which keeps
 * oracle sweeps free of rational-function gcds.
 */
std::pair<TLElement, LaurentPoly> jones_wenzl_scaled(int n);

/// Elementary crossing on 2 strands: sign +1 or -1.
TLElement crossing_expand(int sign);

/// Generator kinds in a composition word.
enum class Gen : std::uint8_t { Identity, Cup, Cap, CrossPos, CrossNeg, Projector };

/// One generator in a layer; `width` is the strand count for Identity/Projector.
struct Generator {
    Gen kind = Gen::Identity;
    int width = 1;

    int inputs() const;
    int outputs() const;
};

/// A layer is a left-to-right tensor product of generators.
using Layer = std::vector<Generator>;

/**
 * @brief A diagram as a bottom-to-top sequence of layers.
 */
struct CompositionWord {
    int domain = 0;
    std::vector<Layer> layers;

    /// Throws SizeMismatch if adjacent layers disagree on strand counts.
    int codomain() const;
};

/**
 * @brief Expand a word into a TLElement by sweeping layer by layer.
 *
 * Projectors are expanded only when applied, in their integral-scaled form; the
 * accumulated scale is divided out at the end.
 */
TLElement evaluate_word(const CompositionWord& w, std::size_t max_terms = kDefaultMaxTerms);

/// Scalar value of a closed word (domain and codomain 0). Throws NotClosed otherwise.
RationalFunction evaluate_closed_sl2(const CompositionWord& w, std::size_t max_terms = kDefaultMaxTerms);

/**
 * @brief Sweep builder used to compile diagrams generator by generator.
 *
 * Keeps a state 0 -> w (or a -> w) with integral coefficients plus the product of
 * projector scales applied so far.
 */
class Sweep {
public:
    explicit Sweep(int domain = 0, std::size_t max_terms = kDefaultMaxTerms);

    int width() const { return state_.codomain(); }
    void cup(int p);
    void cap(int p);
    void crossing(int p, int sign);
    void projector(int p, int n);
    void cable_cup(int p, int n);
    void cable_cap(int p, int n);
    /// n-cabled crossing of the blocks [p, p+n) and [p+n, p+2n); left block moves right.
    void cable_crossing(int p, int n, int sign);
    void apply(const TLElement& g, int p);

    /// The exact element built so far (scale divided out).
    TLElement result() const;
    /// The exact scalar of a closed diagram.
    RationalFunction closed_value() const;

private:
    TLElement state_;
    LaurentPoly scale_;
    std::size_t max_terms_;
};

/**
 * @brief Normalized sl2 colored Jones polynomial J_{n+1} of [2a_1,...,2a_l] by brute force.
 *
 * n-cables the standard template, inserts one projector per component, expands every
 * elementary crossing, divides by (-1)^n [n+1] and applies the framing factor
 * ((-1)^n q^{(n^2+2n)/4})^{-w} with w = -2 sum a_j.
 */
RationalFunction oracle_bracket_two_bridge_sl2(const TwoBridgeSpec& spec, int n,
                                               std::size_t max_terms = kDefaultMaxTerms);

/// The unnormalized bracket of the n-cabled, projector-decorated template.
RationalFunction oracle_raw_bracket_two_bridge_sl2(const TwoBridgeSpec& spec, int n,
                                                   std::size_t max_terms = kDefaultMaxTerms);

}  // namespace skein::a1
