/**
 * @file a1_skein.cpp
 * @brief Temperley-Lieb composition, Jones-Wenzl projectors and the sl2 oracle.
 */
#include "skein/a1_skein.hpp"

#include <map>
#include <mutex>

#include "skein/qcombinatorics.hpp"

namespace skein::a1 {

namespace {

/// (-[2])^k, cached for small k.
const LaurentPoly& loop_power(int k) {
    static std::mutex mu;
    static std::vector<LaurentPoly> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.emplace_back(1);
    while (static_cast<int>(table.size()) <= k) table.push_back(table.back() * -quantum_integer(2));
    return table[static_cast<std::size_t>(k)];
}

/**
 * Compose matchings f (a -> b) below g (b -> c). Returns the partner string of the
 * result and the number of closed loops.
 */
std::pair<std::string, int> compose_matchings(const std::string& f, int a, int b, const std::string& g, int c) {
    std::string out(static_cast<std::size_t>(a + c), '\0');
    std::vector<char> seen(static_cast<std::size_t>(b), 0);
    // Follow a path that enters the glued layer from f's side at f-point x.
    auto run_from_f = [&](int x) -> int {
        for (;;) {
            int y = static_cast<unsigned char>(f[static_cast<std::size_t>(x)]);
            if (y < a) return y;
            int j = y - a;
            seen[static_cast<std::size_t>(j)] = 1;
            int z = static_cast<unsigned char>(g[static_cast<std::size_t>(j)]);
            if (z >= b) return a + (z - b);
            seen[static_cast<std::size_t>(z)] = 1;
            x = a + z;
        }
    };
    auto run_from_g = [&](int x) -> int {
        for (;;) {
            int y = static_cast<unsigned char>(g[static_cast<std::size_t>(x)]);
            if (y >= b) return a + (y - b);
            seen[static_cast<std::size_t>(y)] = 1;
            int z = static_cast<unsigned char>(f[static_cast<std::size_t>(a + y)]);
            if (z < a) return z;
            seen[static_cast<std::size_t>(z - a)] = 1;
            x = z - a;
        }
    };
    std::vector<char> done(static_cast<std::size_t>(a + c), 0);
    auto link = [&](int x, int y) {
        out[static_cast<std::size_t>(x)] = static_cast<char>(y);
        out[static_cast<std::size_t>(y)] = static_cast<char>(x);
        done[static_cast<std::size_t>(x)] = done[static_cast<std::size_t>(y)] = 1;
    };
    for (int i = 0; i < a; ++i)
        if (!done[static_cast<std::size_t>(i)]) link(i, run_from_f(i));
    for (int i = 0; i < c; ++i)
        if (!done[static_cast<std::size_t>(a + i)]) link(a + i, run_from_g(b + i));
    int loops = 0;
    for (int j = 0; j < b; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        ++loops;
        int x = j;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            int y = static_cast<unsigned char>(f[static_cast<std::size_t>(a + x)]) - a;  // along f
            seen[static_cast<std::size_t>(y)] = 1;
            x = static_cast<unsigned char>(g[static_cast<std::size_t>(y)]);  // along g
        } while (!seen[static_cast<std::size_t>(x)]);
    }
    return {std::move(out), loops};
}

/// Partner string of the identity on n strands.
std::string identity_partner(int n) {
    std::string s(static_cast<std::size_t>(2 * n), '\0');
    for (int i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = static_cast<char>(n + i);
        s[static_cast<std::size_t>(n + i)] = static_cast<char>(i);
    }
    return s;
}

std::string tensor_partner(const std::string& f, int fa, int fb, const std::string& g, int ga, int gb) {
    const int a = fa + ga;
    // f bottom -> [0, fa), g bottom -> [fa, a), f top -> [a, a+fb), g top -> [a+fb, a+fb+gb)
    auto fmap = [&](int x) { return x < fa ? x : a + (x - fa); };
    auto gmap = [&](int x) { return x < ga ? fa + x : a + fb + (x - ga); };
    std::string s(static_cast<std::size_t>(a + fb + gb), '\0');
    for (int x = 0; x < fa + fb; ++x)
        s[static_cast<std::size_t>(fmap(x))] = static_cast<char>(fmap(static_cast<unsigned char>(f[static_cast<std::size_t>(x)])));
    for (int x = 0; x < ga + gb; ++x)
        s[static_cast<std::size_t>(gmap(x))] = static_cast<char>(gmap(static_cast<unsigned char>(g[static_cast<std::size_t>(x)])));
    return s;
}

void check_cap(std::size_t n, std::size_t max_terms) {
    if (n > max_terms) throw ResourceLimit("Temperley-Lieb element exceeded " + std::to_string(max_terms) + " terms");
}

}  // namespace

// ------------------------------------------------------------ PlanarMatching

bool PlanarMatching::valid() const {
    const int m = a + b;
    if (static_cast<int>(partner.size()) != m || m % 2 != 0) return false;
    // Boundary cyclic order: bottom left->right, then top right->left.
    auto cyc = [&](int x) { return x < a ? x : a + (b - 1 - (x - a)); };
    for (int x = 0; x < m; ++x) {
        int y = static_cast<unsigned char>(partner[static_cast<std::size_t>(x)]);
        if (y < 0 || y >= m || y == x || static_cast<unsigned char>(partner[static_cast<std::size_t>(y)]) != x)
            return false;
    }
    for (int x = 0; x < m; ++x) {
        int y = static_cast<unsigned char>(partner[static_cast<std::size_t>(x)]);
        int lo = std::min(cyc(x), cyc(y)), hi = std::max(cyc(x), cyc(y));
        for (int u = 0; u < m; ++u) {
            int v = static_cast<unsigned char>(partner[static_cast<std::size_t>(u)]);
            int cu = cyc(u), cv = cyc(v);
            bool in_u = lo < cu && cu < hi, in_v = lo < cv && cv < hi;
            if (u != x && u != y && in_u != in_v) return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------- TLElement

TLElement TLElement::identity(int n) {
    TLElement e(n, n);
    e.terms_.emplace(identity_partner(n), RationalFunction(1));
    return e;
}

TLElement TLElement::scalar(const RationalFunction& c) {
    TLElement e(0, 0);
    e.add(std::string(), c);
    return e;
}

TLElement TLElement::from_matching(const PlanarMatching& m, const RationalFunction& c) {
    if (!m.valid()) throw std::invalid_argument("invalid planar matching");
    TLElement e(m.a, m.b);
    e.add(m.partner, c);
    return e;
}

TLElement TLElement::cup() { return cable_cup(1); }
TLElement TLElement::cap() { return cable_cap(1); }

TLElement TLElement::cable_cup(int n) {
    TLElement e(0, 2 * n);
    std::string s(static_cast<std::size_t>(2 * n), '\0');
    for (int i = 0; i < 2 * n; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>(2 * n - 1 - i);
    e.add(s, 1);
    return e;
}

TLElement TLElement::cable_cap(int n) {
    TLElement e(2 * n, 0);
    std::string s(static_cast<std::size_t>(2 * n), '\0');
    for (int i = 0; i < 2 * n; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>(2 * n - 1 - i);
    e.add(s, 1);
    return e;
}

TLElement TLElement::hook(int n, int i) {
    if (i < 0 || i + 1 >= n) throw std::invalid_argument("hook index out of range");
    std::string s = identity_partner(n);
    auto set = [&](int x, int y) {
        s[static_cast<std::size_t>(x)] = static_cast<char>(y);
        s[static_cast<std::size_t>(y)] = static_cast<char>(x);
    };
    set(i, i + 1);
    set(n + i, n + i + 1);
    TLElement e(n, n);
    e.add(s, 1);
    return e;
}

void TLElement::add(const std::string& partner, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(partner, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalFunction TLElement::coefficient(const PlanarMatching& m) const {
    if (m.a != a_ || m.b != b_) return {};
    auto it = terms_.find(m.partner);
    return it == terms_.end() ? RationalFunction() : it->second;
}

RationalFunction TLElement::scalar_value() const {
    if (a_ != 0 || b_ != 0) throw NotClosed("scalar_value of a diagram with boundary");
    auto it = terms_.find(std::string());
    return it == terms_.end() ? RationalFunction() : it->second;
}

TLElement TLElement::scaled(const RationalFunction& c) const {
    TLElement e(a_, b_);
    if (c.is_zero()) return e;
    for (const auto& [m, x] : terms_) e.terms_.emplace(m, x * c);
    return e;
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (a_ != o.a_ || b_ != o.b_) throw SizeMismatch("adding Temperley-Lieb elements of different shapes");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) { return *this += o.scaled(-1); }

bool operator==(const TLElement& x, const TLElement& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_ || x.terms_.size() != y.terms_.size()) return false;
    for (const auto& [m, c] : x.terms_) {
        auto it = y.terms_.find(m);
        if (it == y.terms_.end() || it->second != c) return false;
    }
    return true;
}

// ------------------------------------------------------------ free functions

TLElement tl_compose(const TLElement& f, const TLElement& g, std::size_t max_terms) {
    if (f.codomain() != g.domain())
        throw SizeMismatch("compose: codomain " + std::to_string(f.codomain()) + " != domain " +
                           std::to_string(g.domain()));
    const int a = f.domain(), b = f.codomain(), c = g.codomain();
    TLElement out(a, c);
    for (const auto& [fm, fc] : f.terms()) {
        for (const auto& [gm, gc] : g.terms()) {
            auto [m, loops] = compose_matchings(fm, a, b, gm, c);
            RationalFunction coeff = fc * gc;
            if (loops) coeff *= RationalFunction(loop_power(loops));
            out.add(m, coeff);
        }
        check_cap(out.size(), max_terms);
    }
    return out;
}

TLElement tl_tensor(const TLElement& f, const TLElement& g) {
    TLElement out(f.domain() + g.domain(), f.codomain() + g.codomain());
    for (const auto& [fm, fc] : f.terms())
        for (const auto& [gm, gc] : g.terms())
            out.add(tensor_partner(fm, f.domain(), f.codomain(), gm, g.domain(), g.codomain()), fc * gc);
    return out;
}

TLElement tl_apply(const TLElement& f, const TLElement& g, int p, std::size_t max_terms) {
    const int w = f.codomain();
    const int k = g.domain();
    if (p < 0 || p + k > w) throw SizeMismatch("local generator does not fit at position " + std::to_string(p));
    TLElement padded = g;
    if (p > 0) padded = tl_tensor(TLElement::identity(p), padded);
    if (w - p - k > 0) padded = tl_tensor(padded, TLElement::identity(w - p - k));
    return tl_compose(f, padded, max_terms);
}

TLElement jones_wenzl(int n) {
    if (n < 0) throw std::invalid_argument("projector size must be nonnegative");
    static std::mutex mu;
    static std::map<int, TLElement> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    TLElement result = TLElement::identity(n);
    if (n >= 2) {
        TLElement prev = tl_tensor(jones_wenzl(n - 1), TLElement::identity(1));
        RationalFunction coeff(quantum_integer(n - 1), quantum_integer(n));
        TLElement hooked = tl_compose(tl_compose(prev, TLElement::hook(n, n - 2)), prev);
        result = prev + hooked.scaled(coeff);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
    return result;
}

std::pair<TLElement, LaurentPoly> jones_wenzl_scaled(int n) {
    static std::mutex mu;
    static std::map<int, std::pair<TLElement, LaurentPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    TLElement f = jones_wenzl(n);
    LaurentPoly d(1);
    for (const auto& [m, c] : f.terms()) {
        const LaurentPoly& den = c.den();
        LaurentPoly g = poly_gcd(d, den);
        d = d * exact_div(den, g);
    }
    TLElement scaled = f.scaled(RationalFunction(d));
    for (const auto& [m, c] : scaled.terms())
        if (!c.is_polynomial()) throw std::logic_error("projector scale does not clear denominators");
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::make_pair(scaled, d)).first->second;
}

TLElement crossing_expand(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
    TLElement x = TLElement::identity(2).scaled(RationalFunction(q_pow(sign, 4)));
    x += TLElement::hook(2, 0).scaled(RationalFunction(q_pow(-sign, 4)));
    return x;
}

int Generator::inputs() const {
    switch (kind) {
        case Gen::Identity:
        case Gen::Projector: return width;
        case Gen::Cup: return 0;
        case Gen::Cap:
        case Gen::CrossPos:
        case Gen::CrossNeg: return 2;
    }
    return 0;
}

int Generator::outputs() const {
    switch (kind) {
        case Gen::Identity:
        case Gen::Projector: return width;
        case Gen::Cap: return 0;
        case Gen::Cup:
        case Gen::CrossPos:
        case Gen::CrossNeg: return 2;
    }
    return 0;
}

int CompositionWord::codomain() const {
    int w = domain;
    for (const auto& layer : layers) {
        int in = 0, out = 0;
        for (const auto& g : layer) {
            in += g.inputs();
            out += g.outputs();
        }
        if (in != w) throw SizeMismatch("layer expects " + std::to_string(in) + " strands, got " + std::to_string(w));
        w = out;
    }
    return w;
}

// --------------------------------------------------------------------- Sweep

Sweep::Sweep(int domain, std::size_t max_terms)
    : state_(domain == 0 ? TLElement::scalar(1) : TLElement::identity(domain)), scale_(1), max_terms_(max_terms) {}

void Sweep::apply(const TLElement& g, int p) { state_ = tl_apply(state_, g, p, max_terms_); }
void Sweep::cup(int p) { apply(TLElement::cup(), p); }
void Sweep::cap(int p) { apply(TLElement::cap(), p); }
void Sweep::crossing(int p, int sign) { apply(crossing_expand(sign), p); }
void Sweep::cable_cup(int p, int n) { apply(TLElement::cable_cup(n), p); }
void Sweep::cable_cap(int p, int n) { apply(TLElement::cable_cap(n), p); }

void Sweep::projector(int p, int n) {
    if (n <= 1) return;
    const auto& [f, d] = jones_wenzl_scaled(n);
    apply(f, p);
    scale_ *= d;
}

void Sweep::cable_crossing(int p, int n, int sign) {
    for (int i = n - 1; i >= 0; --i)
        for (int j = 0; j < n; ++j) crossing(p + i + j, sign);
}

TLElement Sweep::result() const {
    if (scale_.is_one()) return state_;
    return state_.scaled(RationalFunction(LaurentPoly(1), scale_));
}

RationalFunction Sweep::closed_value() const {
    if (state_.codomain() != 0 || state_.domain() != 0) throw NotClosed("diagram has open boundary");
    return RationalFunction(as_laurent(state_.scalar_value()), scale_);
}

TLElement evaluate_word(const CompositionWord& w, std::size_t max_terms) {
    (void)w.codomain();  // validates strand counts
    Sweep sweep(w.domain, max_terms);
    int width = w.domain;
    for (const auto& layer : w.layers) {
        // Apply right to left so positions of generators further left are unaffected.
        int pos = width;
        for (auto it = layer.rbegin(); it != layer.rend(); ++it) {
            pos -= it->inputs();
            switch (it->kind) {
                case Gen::Identity: break;
                case Gen::Cup: sweep.cup(pos); break;
                case Gen::Cap: sweep.cap(pos); break;
                case Gen::CrossPos: sweep.crossing(pos, 1); break;
                case Gen::CrossNeg: sweep.crossing(pos, -1); break;
                case Gen::Projector: sweep.projector(pos, it->width); break;
            }
        }
        width = sweep.width();
    }
    return sweep.result();
}

RationalFunction evaluate_closed_sl2(const CompositionWord& w, std::size_t max_terms) {
    if (w.domain != 0 || w.codomain() != 0) throw NotClosed("word has open boundary");
    return evaluate_word(w, max_terms).scalar_value();
}

RationalFunction oracle_raw_bracket_two_bridge_sl2(const TwoBridgeSpec& spec, int n, std::size_t max_terms) {
    if (n < 0) throw std::invalid_argument("color must be nonnegative");
    if (n == 0) return RationalFunction(1);
    Sweep sweep(0, max_terms);
    using K = TemplateStep::Kind;
    for (const auto& step : two_bridge_template(spec)) {
        const int p = step.block * n;
        switch (step.kind) {
            case K::CableCup: sweep.cable_cup(p, n); break;
            case K::Projector: sweep.projector(p, n); break;
            case K::CableCrossing: sweep.cable_crossing(p, n, step.sign); break;
            case K::CableCap: sweep.cable_cap(p, n); break;
        }
    }
    return sweep.closed_value();
}

RationalFunction oracle_bracket_two_bridge_sl2(const TwoBridgeSpec& spec, int n, std::size_t max_terms) {
    if (n == 0) return RationalFunction(1);
    RationalFunction raw = oracle_raw_bracket_two_bridge_sl2(spec, n, max_terms);
    long sum_a = 0;
    for (long x : spec.a) sum_a += x;
    const long writhe = -2 * sum_a;
    // ((-1)^n q^{(n^2+2n)/4})^{-w}; -w is even so the sign drops out.
    LaurentPoly framing = LaurentPoly::monomial(-writhe * t_exponent(static_cast<long>(n) * n + 2L * n, 4));
    LaurentPoly loop = quantum_integer(n + 1);
    if (n % 2) loop = -loop;
    return raw * RationalFunction(framing) / RationalFunction(loop);
}

}  // namespace skein::a1
