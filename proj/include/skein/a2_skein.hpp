/**
 * @file a2_skein.hpp
 * @brief Brute-force A2 (Kuperberg sl3) bracket oracle on directed trivalent webs.
 *
 * A web is stored as a half-edge combinatorial map. Every trivalent vertex is a
 * sink (all edges in) or a source (all edges out); boundary points are univalent.
 * The three half-edges of a trivalent vertex are stored consecutively in
 * counter-clockwise order, which is all the embedding information the reduction
 * rules need: faces are traced as next(h) = clockwise successor of twin(h).
 *
 * Diagrams live in the same sweep frame as the A1 oracle (domain at the bottom,
 * codomain at the top). Each boundary point carries an orientation: +1 if the strand
 * flows upward through it, -1 if downward.
 *
 * Local rules: circle = [3], bigon = [2], square = sum of its two smoothings.
 * A crossing resolves as q^{s/3} (oriented smoothing) - q^{-s/6} (I-web), with s = +1
 * for a positive crossing.
 */
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skein/common.hpp"
#include "skein/laurent.hpp"
#include "skein/two_bridge_spec.hpp"

namespace skein::a2 {

/// Reduction got stuck on a closed web (would indicate a data-structure bug).
struct Irreducible : std::logic_error {
    using std::logic_error::logic_error;
};

enum class VKind : std::uint8_t { Boundary, Sink, Source, Dead };

/// Strand orientations along one boundary edge, left to right.
using Orientation = std::vector<int>;

/**
 * @brief A directed trivalent web in the sweep frame.
 *
 * boundary[i] is the vertex id of the i-th boundary point: bottom points first
 * (left to right), then top points (left to right).
 */
struct Web {
    int a = 0;
    int b = 0;
    Orientation bottom;
    Orientation top;
    std::vector<VKind> kind;
    std::vector<int> base;    // first half-edge of each vertex
    std::vector<int> twin;    // per half-edge
    std::vector<int> origin;  // per half-edge
    std::vector<int> boundary;

    int add_vertex(VKind k);
    int degree(int v) const { return kind[static_cast<std::size_t>(v)] == VKind::Boundary ? 1 : 3; }
    /// Counter-clockwise successor of h around its origin.
    int ccw(int h) const;
    /// Clockwise successor of h around its origin.
    int cw(int h) const;
    /// True if the edge of h is directed away from origin(h).
    bool out(int h) const;
    std::size_t live_trivalent() const;
};

/**
 * @brief Canonical label of a web with every component attached to the boundary.
 *
 * Two such webs are planar-isotopic rel boundary iff their keys are equal.
 */
std::string canonical_key(const Web& w);

/**
 * @brief A linear combination of reduced (non-elliptic) webs with common boundary.
 */
class WebElement {
public:
    struct Entry {
        Web web;
        RationalFunction coeff;
    };
    using Terms = std::unordered_map<std::string, Entry>;

    WebElement(Orientation bottom, Orientation top) : bottom_(std::move(bottom)), top_(std::move(top)) {}

    static WebElement identity(const Orientation& o);
    static WebElement scalar(const RationalFunction& c);
    /// Reduce w and add c * w.
    static WebElement from_web(const Web& w, const RationalFunction& c = 1);

    const Orientation& bottom() const { return bottom_; }
    const Orientation& top() const { return top_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Add c * w for an already reduced web w.
    void add_reduced(const Web& w, const RationalFunction& c);
    /// Reduce w to non-elliptic webs and add c times the result.
    void add(const Web& w, const RationalFunction& c);
    /// For closed elements: the coefficient of the empty web.
    RationalFunction scalar_value() const;

    WebElement scaled(const RationalFunction& c) const;
    WebElement& operator+=(const WebElement& o);
    WebElement& operator-=(const WebElement& o);
    friend WebElement operator+(WebElement x, const WebElement& y) { return x += y; }
    friend WebElement operator-(WebElement x, const WebElement& y) { return x -= y; }
    friend bool operator==(const WebElement& x, const WebElement& y);

private:
    Orientation bottom_, top_;
    Terms terms_;
};

// ------------------------------------------------------------- local webs

/// A single web built from straight-line coordinates; rotations come from angles.
class WebBuilder {
public:
    WebBuilder(Orientation bottom, Orientation top);
    int bottom_point(int i) const { return i; }
    int top_point(int i) const { return static_cast<int>(bottom_.size()) + i; }
    int add_vertex(VKind k, double x, double y);
    void connect(int u, int v);
    /// Throws std::logic_error if orientations or degrees are inconsistent.
    Web build() const;

private:
    Orientation bottom_, top_;
    std::vector<VKind> kinds_;
    std::vector<std::pair<double, double>> pos_;
    std::vector<std::pair<int, int>> edges_;
};

Web identity_web(const Orientation& o);
/// 0 -> 2 arc with top orientations (o, -o).
Web cup_web(int o);
/// 2 -> 0 arc with bottom orientations (o, -o).
Web cap_web(int o);
/// The I-web replacing a crossing of two strands with bottom orientations (o1, o2).
Web i_web(int o1, int o2);
/// The oriented smoothing of a crossing with bottom orientations (o1, o2).
Web smoothing_web(int o1, int o2);
/// Trivalent vertex joining two bottom strands (o, o) into one top strand (-o).
Web merge_web(int o);
/// Trivalent vertex splitting one bottom strand (o) into two top strands (-o, -o).
Web split_web(int o);

/// Oriented sign of the crossing whose over-strand runs bottom-left to top-right (geom=+1) or not.
int crossing_sign(int geom, int o1, int o2);

/**
 * @brief Elementary crossing on strands with bottom orientations (o1, o2).
 *
 * geom = +1: the strand from bottom-left to top-right is over; geom = -1: under.
 */
WebElement crossing_expand(int geom, int o1, int o2);

// ----------------------------------------------------------- composition

/// g o f: stack g (b -> c) on top of f (a -> b). Throws SizeMismatch.
WebElement web_compose(const WebElement& f, const WebElement& g, std::size_t max_terms = kDefaultMaxTerms);
/// f to the left of g.
WebElement web_tensor(const WebElement& f, const WebElement& g);
/// Apply a local element g at top positions p.. of f.
WebElement web_apply(const WebElement& f, const WebElement& g, int p, std::size_t max_terms = kDefaultMaxTerms);

/// Stack g on top of f without reducing; `loops` receives the number of closed loops formed.
Web web_glue(const Web& f, const Web& g, int& loops);
/// Place g to the right of f without reducing.
Web web_juxtapose(const Web& f, const Web& g);

/// Rotate a web element by 180 degrees (domain and codomain exchange, reversed).
WebElement rotate180(const WebElement& x);
/// Reverse every edge direction.
WebElement reverse(const WebElement& x);

/**
 * @brief Evaluate a closed web (empty boundary) by circle, bigon and square removal.
 * @throws NotClosed if w has boundary; Irreducible if no reducible face is found.
 */
RationalFunction web_reduce_closed(const Web& w);

/// Same, but square faces are chosen in an order driven by `seed` (confluence tests).
RationalFunction web_reduce_closed_shuffled(const Web& w, unsigned seed);

/// The A2 clasp on n parallel strands of orientation o (exact, cached).
WebElement a2_clasp(int n, int o = 1);
/// An integral multiple D * clasp together with D.
std::pair<WebElement, LaurentPoly> a2_clasp_scaled(int n, int o = 1);

enum class VertexKind { Trivalent, Quadrivalent };

/**
 * @brief Colored vertices without clasps.
 *
 * Trivalent(n): one bundle of n upward strands at the bottom splitting into two
 * bundles of n downward strands at the top (a colored sink), built recursively with
 * I-web ladders. Quadrivalent(n, m): the n-cable over/under m-cable crossing of
 * upward bundles with every elementary crossing replaced by its I-web.
 */
WebElement colored_vertex(VertexKind kind, int n, int m = 0);

/**
 * @brief Sweep builder for A2 diagrams, mirroring the A1 builder.
 */
class Sweep {
public:
    explicit Sweep(const Orientation& bottom = {}, std::size_t max_terms = kDefaultMaxTerms);

    int width() const { return static_cast<int>(state_.top().size()); }
    const Orientation& top() const { return state_.top(); }
    void apply(const WebElement& g, int p);
    void cup(int p, int o);
    void cap(int p);
    /// geom = +1: left strand over (bottom-left to top-right).
    void crossing(int p, int geom);
    void clasp(int p, int n);
    /// n nested cups; the left block gets orientation o.
    void cable_cup(int p, int n, int o);
    void cable_cap(int p, int n);
    void cable_crossing(int p, int n, int geom);

    WebElement result() const;
    RationalFunction closed_value() const;

private:
    WebElement state_;
    LaurentPoly scale_;
    std::size_t max_terms_;
};

/**
 * @brief Normalized sl3 colored Jones polynomial J_{(n,0)} of [2a_1,...,2a_l] by brute force.
 *
 * Divides by [n+1][n+2]/[2] and multiplies the framing factor (q^{(n^2+3n)/3})^{-w}.
 */
RationalFunction oracle_bracket_two_bridge_sl3(const TwoBridgeSpec& spec, int n,
                                               std::size_t max_terms = kDefaultMaxTerms);

/// The unnormalized A2 bracket of the n-cabled, clasp-decorated oriented template.
RationalFunction oracle_raw_bracket_two_bridge_sl3(const TwoBridgeSpec& spec, int n,
                                                   std::size_t max_terms = kDefaultMaxTerms);

/// Oriented writhe of the template as traced by the oracle (for cross-checks).
long template_writhe(const TwoBridgeSpec& spec);

}  // namespace skein::a2
