/**
 * @file a2_skein.cpp
 * @brief Half-edge webs, Kuperberg reduction, A2 clasps and the sl3 oracle.
 */
#include "skein/a2_skein.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <random>
#include <unordered_set>

#include "skein/qcombinatorics.hpp"

namespace skein::a2 {

namespace {

const LaurentPoly& qint(int k) {
    static const LaurentPoly two = quantum_integer(2);
    static const LaurentPoly three = quantum_integer(3);
    return k == 2 ? two : three;
}

LaurentPoly three_power(int k) {
    static std::mutex mu;
    static std::vector<LaurentPoly> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.emplace_back(1);
    while (static_cast<int>(table.size()) <= k) table.push_back(table.back() * qint(3));
    return table[static_cast<std::size_t>(k)];
}

int boundary_index(const Web& w, int v) {
    for (std::size_t i = 0; i < w.boundary.size(); ++i)
        if (w.boundary[i] == v) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------- rewiring

/**
 * Remove the given vertices. `partner` pairs half-edges of removed vertices that
 * are joined straight through (value -1 marks a discarded half-edge). Every kept
 * half-edge whose edge led into the removed region is reconnected by following
 * twin / partner alternately. Returns the number of closed loops created.
 */
int rewire(Web& w, const std::vector<int>& removed, const std::unordered_map<int, int>& partner) {
    std::unordered_set<int> rset;
    std::vector<int> rhalf;
    for (int v : removed) {
        for (int k = 0; k < w.degree(v); ++k) {
            rset.insert(w.base[static_cast<std::size_t>(v)] + k);
            rhalf.push_back(w.base[static_cast<std::size_t>(v)] + k);
        }
    }
    auto partner_of = [&](int h) {
        auto it = partner.find(h);
        if (it == partner.end() || it->second < 0)
            throw std::logic_error("rewire reached a half-edge without a pass-through partner");
        return it->second;
    };
    std::unordered_set<int> visited;
    std::vector<std::pair<int, int>> links;
    std::unordered_set<int> linked;
    for (int h : rhalf) {
        const int x = w.twin[static_cast<std::size_t>(h)];
        if (rset.count(x) || linked.count(x)) continue;
        int cur = h;
        int end = -1;
        for (;;) {
            visited.insert(cur);
            int p = partner_of(cur);
            visited.insert(p);
            int nxt = w.twin[static_cast<std::size_t>(p)];
            if (!rset.count(nxt)) {
                end = nxt;
                break;
            }
            cur = nxt;
        }
        links.emplace_back(x, end);
        linked.insert(x);
        linked.insert(end);
    }
    int loops = 0;
    for (int h : rhalf) {
        if (visited.count(h)) continue;
        auto it = partner.find(h);
        if (it == partner.end() || it->second < 0) continue;
        ++loops;
        int cur = h;
        while (!visited.count(cur)) {
            visited.insert(cur);
            int p = partner_of(cur);
            visited.insert(p);
            cur = w.twin[static_cast<std::size_t>(p)];
        }
    }
    for (auto [x, y] : links) {
        if (w.out(x) == w.out(y)) throw std::logic_error("rewiring joined incompatible edge directions");
        w.twin[static_cast<std::size_t>(x)] = y;
        w.twin[static_cast<std::size_t>(y)] = x;
    }
    for (int h : rhalf) w.twin[static_cast<std::size_t>(h)] = -1;
    for (int v : removed) w.kind[static_cast<std::size_t>(v)] = VKind::Dead;
    return loops;
}

// ------------------------------------------------------------- face search

struct Face {
    std::vector<int> half;  // half-edges in traversal order
};

int next_in_face(const Web& w, int h) { return w.cw(w.twin[static_cast<std::size_t>(h)]); }

/// All internal faces of degree 2 or 4 (faces touching the boundary are skipped).
std::vector<Face> small_faces(const Web& w, bool first_bigon_only) {
    std::vector<Face> out;
    std::vector<char> seen(w.twin.size(), 0);
    for (std::size_t v = 0; v < w.kind.size(); ++v) {
        if (w.kind[v] != VKind::Sink && w.kind[v] != VKind::Source) continue;
        for (int k = 0; k < 3; ++k) {
            const int h0 = w.base[v] + k;
            if (seen[static_cast<std::size_t>(h0)]) continue;
            Face f;
            bool boundary = false;
            int cur = h0;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                if (w.kind[static_cast<std::size_t>(w.origin[static_cast<std::size_t>(cur)])] == VKind::Boundary)
                    boundary = true;
                f.half.push_back(cur);
                cur = next_in_face(w, cur);
            } while (cur != h0);
            if (boundary) continue;
            if (f.half.size() == 2) {
                out.push_back(std::move(f));
                if (first_bigon_only) return out;
            } else if (f.half.size() == 4) {
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

/// The half-edge at the origin of `h_out` that is neither h_out nor h_in.
int third_half(const Web& w, int v, int h1, int h2) {
    for (int k = 0; k < 3; ++k) {
        int h = w.base[static_cast<std::size_t>(v)] + k;
        if (h != h1 && h != h2) return h;
    }
    throw std::logic_error("vertex has no third half-edge");
}

/// Remove a bigon in place; returns the number of loops created.
int remove_bigon(Web& w, const Face& f) {
    const int h1 = f.half[0], h2 = f.half[1];
    const int x = w.origin[static_cast<std::size_t>(h1)], y = w.origin[static_cast<std::size_t>(h2)];
    const int t1 = w.twin[static_cast<std::size_t>(h1)], t2 = w.twin[static_cast<std::size_t>(h2)];
    const int x3 = third_half(w, x, h1, t2);
    const int y3 = third_half(w, y, h2, t1);
    std::unordered_map<int, int> partner{{x3, h1}, {h1, x3}, {t1, y3}, {y3, t1}, {h2, -1}, {t2, -1}};
    return rewire(w, {x, y}, partner);
}

/// Smoothing `which` (0 or 1) of a square face, in place; returns loops created.
int smooth_square(Web& w, const Face& f, int which) {
    int h[4], v[4], t[4], o[4];
    for (int i = 0; i < 4; ++i) {
        h[i] = f.half[static_cast<std::size_t>(i)];
        v[i] = w.origin[static_cast<std::size_t>(h[i])];
        t[i] = w.twin[static_cast<std::size_t>(h[i])];
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) throw Irreducible("square face with repeated vertex");
    for (int i = 0; i < 4; ++i) o[i] = third_half(w, v[i], h[i], t[(i + 3) % 4]);
    std::unordered_map<int, int> partner;
    auto pair = [&](int x, int y) {
        partner[x] = y;
        partner[y] = x;
    };
    // Edge i joins v[i] -> v[i+1]; smoothing keeps edges `which` and `which+2`.
    for (int i = which; i < 4; i += 2) {
        pair(o[i], h[i]);
        pair(t[i], o[(i + 1) % 4]);
        const int d = (i + 1) % 4;
        partner[h[d]] = -1;
        partner[t[d]] = -1;
    }
    return rewire(w, {v[0], v[1], v[2], v[3]}, partner);
}

// ---------------------------------------------------------- canonical form

/**
 * Relabel vertices by a breadth-first search from the boundary in order, and
 * return (key, compacted web). All components must touch the boundary.
 */
std::pair<std::string, Web> canonicalize(const Web& w) {
    const std::size_t nv = w.kind.size();
    std::vector<int> label(nv, -1), entry(nv, -1), order;
    order.reserve(nv);
    for (std::size_t i = 0; i < w.boundary.size(); ++i) {
        const int v = w.boundary[i];
        label[static_cast<std::size_t>(v)] = static_cast<int>(i);
        entry[static_cast<std::size_t>(v)] = w.base[static_cast<std::size_t>(v)];
        order.push_back(v);
    }
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const int v = order[qi];
        const int e = entry[static_cast<std::size_t>(v)];
        const int deg = w.degree(v);
        for (int k = 0; k < deg; ++k) {
            const int h = (deg == 1) ? e : w.base[static_cast<std::size_t>(v)] + (e - w.base[static_cast<std::size_t>(v)] + k) % 3;
            const int th = w.twin[static_cast<std::size_t>(h)];
            const int u = w.origin[static_cast<std::size_t>(th)];
            if (label[static_cast<std::size_t>(u)] < 0) {
                label[static_cast<std::size_t>(u)] = static_cast<int>(order.size());
                entry[static_cast<std::size_t>(u)] = th;
                order.push_back(u);
            }
        }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if ((w.kind[v] == VKind::Sink || w.kind[v] == VKind::Source) && label[v] < 0)
            throw std::logic_error("canonicalize: web has a closed component");

    Web c;
    c.a = w.a;
    c.b = w.b;
    c.bottom = w.bottom;
    c.top = w.top;
    for (int v : order) c.add_vertex(w.kind[static_cast<std::size_t>(v)]);
    c.boundary.resize(w.boundary.size());
    for (std::size_t i = 0; i < w.boundary.size(); ++i) c.boundary[i] = static_cast<int>(i);
    // slot of half-edge h relative to its vertex entry
    auto slot = [&](int h) {
        const int v = w.origin[static_cast<std::size_t>(h)];
        if (w.degree(v) == 1) return 0;
        const int b = w.base[static_cast<std::size_t>(v)];
        return (h - b - (entry[static_cast<std::size_t>(v)] - b) + 3) % 3;
    };
    std::string key;
    key.reserve(order.size() * 16 + 8);
    auto put = [&](int x) { key.append(reinterpret_cast<const char*>(&x), sizeof(int)); };
    put(w.a);
    put(w.b);
    for (int v : order) {
        const int deg = w.degree(v);
        const int e = entry[static_cast<std::size_t>(v)];
        put(static_cast<int>(w.kind[static_cast<std::size_t>(v)]));
        for (int k = 0; k < deg; ++k) {
            const int h = (deg == 1) ? e : w.base[static_cast<std::size_t>(v)] + (e - w.base[static_cast<std::size_t>(v)] + k) % 3;
            const int th = w.twin[static_cast<std::size_t>(h)];
            const int u = w.origin[static_cast<std::size_t>(th)];
            const int lu = label[static_cast<std::size_t>(u)];
            const int su = slot(th);
            put(lu);
            put(su);
            const int lv = label[static_cast<std::size_t>(v)];
            c.twin[static_cast<std::size_t>(c.base[static_cast<std::size_t>(lv)] + k)] =
                c.base[static_cast<std::size_t>(lu)] + su;
        }
    }
    return {std::move(key), std::move(c)};
}

/**
 * Reduce a web to non-elliptic form, accumulating into `out` (keyed canonically).
 * `pick` selects which square to smooth (for confluence tests).
 */
template <class Pick>
void reduce_into(const Web& start, const RationalFunction& coeff, WebElement::Terms& out, Pick pick) {
    std::vector<std::pair<Web, LaurentPoly>> work;
    work.emplace_back(start, LaurentPoly(1));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        for (;;) {
            auto faces = small_faces(w, true);
            if (faces.empty()) {
                auto [key, cw] = canonicalize(w);
                RationalFunction add = coeff * RationalFunction(c);
                auto it = out.find(key);
                if (it == out.end()) {
                    out.emplace(std::move(key), WebElement::Entry{std::move(cw), add});
                } else {
                    it->second.coeff += add;
                    if (it->second.coeff.is_zero()) out.erase(it);
                }
                break;
            }
            // Prefer a bigon (no branching); otherwise smooth a square.
            const Face* bigon = nullptr;
            for (const auto& f : faces)
                if (f.half.size() == 2) {
                    bigon = &f;
                    break;
                }
            if (bigon) {
                int loops = remove_bigon(w, *bigon);
                c *= qint(2);
                if (loops) c *= three_power(loops);
                continue;
            }
            const Face& sq = faces[pick(faces.size())];
            Web other = w;
            int l1 = smooth_square(other, sq, 1);
            LaurentPoly c1 = l1 ? c * three_power(l1) : c;
            work.emplace_back(std::move(other), std::move(c1));
            int l0 = smooth_square(w, sq, 0);
            if (l0) c *= three_power(l0);
        }
    }
}

void reduce_into(const Web& start, const RationalFunction& coeff, WebElement::Terms& out) {
    reduce_into(start, coeff, out, [](std::size_t) { return std::size_t{0}; });
}

/// Glue g on top of f along f's top boundary; returns the raw web and loop count.
std::pair<Web, int> glue(const Web& f, const Web& g) {
    if (f.top != g.bottom) throw SizeMismatch("web composition: boundary orientations do not match");
    Web w;
    w.a = f.a;
    w.b = g.b;
    w.bottom = f.bottom;
    w.top = g.top;
    w.kind = f.kind;
    w.base = f.base;
    w.twin = f.twin;
    w.origin = f.origin;
    const int voff = static_cast<int>(f.kind.size());
    const int hoff = static_cast<int>(f.twin.size());
    for (std::size_t v = 0; v < g.kind.size(); ++v) {
        w.kind.push_back(g.kind[v]);
        w.base.push_back(g.base[v] + hoff);
    }
    for (std::size_t h = 0; h < g.twin.size(); ++h) {
        w.twin.push_back(g.twin[h] < 0 ? -1 : g.twin[h] + hoff);
        w.origin.push_back(g.origin[h] + voff);
    }
    for (int i = 0; i < f.a; ++i) w.boundary.push_back(f.boundary[static_cast<std::size_t>(i)]);
    for (int i = 0; i < g.b; ++i) w.boundary.push_back(g.boundary[static_cast<std::size_t>(g.a + i)] + voff);
    std::vector<int> removed;
    std::unordered_map<int, int> partner;
    for (int j = 0; j < f.b; ++j) {
        const int vf = f.boundary[static_cast<std::size_t>(f.a + j)];
        const int vg = g.boundary[static_cast<std::size_t>(j)] + voff;
        removed.push_back(vf);
        removed.push_back(vg);
        const int hf = w.base[static_cast<std::size_t>(vf)], hg = w.base[static_cast<std::size_t>(vg)];
        partner[hf] = hg;
        partner[hg] = hf;
    }
    // `out` for boundary vertices needs boundary positions; glue before they are dropped
    // is safe because rewire only compares kept half-edges.
    int loops = rewire(w, removed, partner);
    return {std::move(w), loops};
}

Web tensor_webs(const Web& f, const Web& g) {
    Web w;
    w.a = f.a + g.a;
    w.b = f.b + g.b;
    w.bottom = f.bottom;
    w.bottom.insert(w.bottom.end(), g.bottom.begin(), g.bottom.end());
    w.top = f.top;
    w.top.insert(w.top.end(), g.top.begin(), g.top.end());
    w.kind = f.kind;
    w.base = f.base;
    w.twin = f.twin;
    w.origin = f.origin;
    const int voff = static_cast<int>(f.kind.size());
    const int hoff = static_cast<int>(f.twin.size());
    for (std::size_t v = 0; v < g.kind.size(); ++v) {
        w.kind.push_back(g.kind[v]);
        w.base.push_back(g.base[v] + hoff);
    }
    for (std::size_t h = 0; h < g.twin.size(); ++h) {
        w.twin.push_back(g.twin[h] < 0 ? -1 : g.twin[h] + hoff);
        w.origin.push_back(g.origin[h] + voff);
    }
    for (int i = 0; i < f.a; ++i) w.boundary.push_back(f.boundary[static_cast<std::size_t>(i)]);
    for (int i = 0; i < g.a; ++i) w.boundary.push_back(g.boundary[static_cast<std::size_t>(i)] + voff);
    for (int i = 0; i < f.b; ++i) w.boundary.push_back(f.boundary[static_cast<std::size_t>(f.a + i)]);
    for (int i = 0; i < g.b; ++i) w.boundary.push_back(g.boundary[static_cast<std::size_t>(g.a + i)] + voff);
    return w;
}

void check_cap(std::size_t n, std::size_t max_terms) {
    if (n > max_terms) throw ResourceLimit("web element exceeded " + std::to_string(max_terms) + " terms");
}

}  // namespace

// -------------------------------------------------------------------- Web

int Web::add_vertex(VKind k) {
    const int v = static_cast<int>(kind.size());
    kind.push_back(k);
    base.push_back(static_cast<int>(twin.size()));
    const int deg = (k == VKind::Boundary) ? 1 : 3;
    for (int i = 0; i < deg; ++i) {
        twin.push_back(-1);
        origin.push_back(v);
    }
    return v;
}

int Web::ccw(int h) const {
    const int v = origin[static_cast<std::size_t>(h)];
    if (degree(v) == 1) return h;
    const int b = base[static_cast<std::size_t>(v)];
    return b + (h - b + 1) % 3;
}

int Web::cw(int h) const {
    const int v = origin[static_cast<std::size_t>(h)];
    if (degree(v) == 1) return h;
    const int b = base[static_cast<std::size_t>(v)];
    return b + (h - b + 2) % 3;
}

bool Web::out(int h) const {
    const int v = origin[static_cast<std::size_t>(h)];
    switch (kind[static_cast<std::size_t>(v)]) {
        case VKind::Source: return true;
        case VKind::Sink: return false;
        case VKind::Boundary: {
            const int i = boundary_index(*this, v);
            if (i < 0) throw std::logic_error("boundary vertex missing from boundary list");
            if (i < a) return bottom[static_cast<std::size_t>(i)] > 0;
            return top[static_cast<std::size_t>(i - a)] < 0;
        }
        case VKind::Dead: break;
    }
    throw std::logic_error("orientation query on a removed vertex");
}

std::size_t Web::live_trivalent() const {
    return static_cast<std::size_t>(std::count_if(kind.begin(), kind.end(), [](VKind k) {
        return k == VKind::Sink || k == VKind::Source;
    }));
}

std::string canonical_key(const Web& w) { return canonicalize(w).first; }

// ------------------------------------------------------------- WebElement

WebElement WebElement::identity(const Orientation& o) { return from_web(identity_web(o)); }

WebElement WebElement::scalar(const RationalFunction& c) {
    Web empty;
    WebElement e({}, {});
    e.add_reduced(empty, c);
    return e;
}

WebElement WebElement::from_web(const Web& w, const RationalFunction& c) {
    WebElement e(w.bottom, w.top);
    e.add(w, c);
    return e;
}

void WebElement::add_reduced(const Web& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [key, cw] = canonicalize(w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Entry{std::move(cw), c});
    } else {
        it->second.coeff += c;
        if (it->second.coeff.is_zero()) terms_.erase(it);
    }
}

void WebElement::add(const Web& w, const RationalFunction& c) {
    if (w.bottom != bottom_ || w.top != top_) throw SizeMismatch("web boundary does not match element");
    if (c.is_zero()) return;
    reduce_into(w, c, terms_);
}

RationalFunction WebElement::scalar_value() const {
    if (!bottom_.empty() || !top_.empty()) throw NotClosed("scalar_value of a web element with boundary");
    if (terms_.empty()) return {};
    return terms_.begin()->second.coeff;
}

WebElement WebElement::scaled(const RationalFunction& c) const {
    WebElement e(bottom_, top_);
    if (c.is_zero()) return e;
    for (const auto& [k, entry] : terms_) e.terms_.emplace(k, Entry{entry.web, entry.coeff * c});
    return e;
}

WebElement& WebElement::operator+=(const WebElement& o) {
    if (bottom_ != o.bottom_ || top_ != o.top_) throw SizeMismatch("adding web elements with different boundaries");
    for (const auto& [k, entry] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, entry);
        } else {
            it->second.coeff += entry.coeff;
            if (it->second.coeff.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

WebElement& WebElement::operator-=(const WebElement& o) { return *this += o.scaled(-1); }

bool operator==(const WebElement& x, const WebElement& y) {
    if (x.bottom_ != y.bottom_ || x.top_ != y.top_ || x.terms_.size() != y.terms_.size()) return false;
    for (const auto& [k, e] : x.terms_) {
        auto it = y.terms_.find(k);
        if (it == y.terms_.end() || it->second.coeff != e.coeff) return false;
    }
    return true;
}

// ------------------------------------------------------------- WebBuilder

WebBuilder::WebBuilder(Orientation bottom, Orientation top) : bottom_(std::move(bottom)), top_(std::move(top)) {
    const auto na = static_cast<double>(bottom_.size()), nb = static_cast<double>(top_.size());
    for (std::size_t i = 0; i < bottom_.size(); ++i) {
        kinds_.push_back(VKind::Boundary);
        pos_.emplace_back((static_cast<double>(i) + 0.5) / na, 0.0);
    }
    for (std::size_t i = 0; i < top_.size(); ++i) {
        kinds_.push_back(VKind::Boundary);
        pos_.emplace_back((static_cast<double>(i) + 0.5) / nb, 1.0);
    }
}

int WebBuilder::add_vertex(VKind k, double x, double y) {
    kinds_.push_back(k);
    pos_.emplace_back(x, y);
    return static_cast<int>(kinds_.size()) - 1;
}

void WebBuilder::connect(int u, int v) { edges_.emplace_back(u, v); }

Web WebBuilder::build() const {
    Web w;
    w.a = static_cast<int>(bottom_.size());
    w.b = static_cast<int>(top_.size());
    w.bottom = bottom_;
    w.top = top_;
    for (auto k : kinds_) w.add_vertex(k);
    for (int i = 0; i < w.a + w.b; ++i) w.boundary.push_back(i);
    std::vector<std::vector<std::pair<double, int>>> inc(kinds_.size());  // (angle, edge-end id)
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        auto ang = [&](int from, int to) {
            return std::atan2(pos_[static_cast<std::size_t>(to)].second - pos_[static_cast<std::size_t>(from)].second,
                              pos_[static_cast<std::size_t>(to)].first - pos_[static_cast<std::size_t>(from)].first);
        };
        inc[static_cast<std::size_t>(u)].emplace_back(ang(u, v), static_cast<int>(2 * e));
        inc[static_cast<std::size_t>(v)].emplace_back(ang(v, u), static_cast<int>(2 * e + 1));
    }
    std::vector<int> half_of_end(2 * edges_.size(), -1);
    for (std::size_t v = 0; v < kinds_.size(); ++v) {
        auto& lst = inc[v];
        if (static_cast<int>(lst.size()) != w.degree(static_cast<int>(v)))
            throw std::logic_error("web builder: wrong vertex degree");
        std::sort(lst.begin(), lst.end());
        for (std::size_t k = 0; k < lst.size(); ++k)
            half_of_end[static_cast<std::size_t>(lst[k].second)] = w.base[v] + static_cast<int>(k);
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const int h1 = half_of_end[2 * e], h2 = half_of_end[2 * e + 1];
        w.twin[static_cast<std::size_t>(h1)] = h2;
        w.twin[static_cast<std::size_t>(h2)] = h1;
        if (w.out(h1) == w.out(h2)) throw std::logic_error("web builder: inconsistent edge direction");
    }
    return w;
}

Web identity_web(const Orientation& o) {
    WebBuilder b(o, o);
    for (std::size_t i = 0; i < o.size(); ++i)
        b.connect(b.bottom_point(static_cast<int>(i)), b.top_point(static_cast<int>(i)));
    return b.build();
}

Web cup_web(int o) {
    WebBuilder b({}, {o, -o});
    b.connect(b.top_point(0), b.top_point(1));
    return b.build();
}

Web cap_web(int o) {
    WebBuilder b({o, -o}, {});
    b.connect(b.bottom_point(0), b.bottom_point(1));
    return b.build();
}

namespace {

/// Endpoints of a crossing in cyclic order BL, BR, TR, TL with entry flags.
struct CrossingEnds {
    int id[4];
    bool entry[4];
};

CrossingEnds crossing_ends(const WebBuilder& b, int o1, int o2) {
    CrossingEnds c{};
    c.id[0] = b.bottom_point(0);
    c.id[1] = b.bottom_point(1);
    c.id[2] = b.top_point(1);
    c.id[3] = b.top_point(0);
    // Strand 1 runs BL - TR, strand 2 runs BR - TL.
    c.entry[0] = o1 > 0;
    c.entry[2] = o1 < 0;
    c.entry[1] = o2 > 0;
    c.entry[3] = o2 < 0;
    return c;
}

const double kCornerX[4] = {0.25, 0.75, 0.75, 0.25};
const double kCornerY[4] = {0.0, 0.0, 1.0, 1.0};

}  // namespace

Web i_web(int o1, int o2) {
    WebBuilder b({o1, o2}, {o2, o1});
    auto c = crossing_ends(b, o1, o2);
    double ex = 0, ey = 0, xx = 0, xy = 0;
    for (int i = 0; i < 4; ++i) {
        (c.entry[i] ? ex : xx) += kCornerX[i] / 2;
        (c.entry[i] ? ey : xy) += kCornerY[i] / 2;
    }
    const int sink = b.add_vertex(VKind::Sink, 0.6 * ex + 0.2, 0.6 * ey + 0.2);
    const int source = b.add_vertex(VKind::Source, 0.6 * xx + 0.2, 0.6 * xy + 0.2);
    for (int i = 0; i < 4; ++i) b.connect(c.id[i], c.entry[i] ? sink : source);
    b.connect(source, sink);
    return b.build();
}

Web smoothing_web(int o1, int o2) {
    WebBuilder b({o1, o2}, {o2, o1});
    auto c = crossing_ends(b, o1, o2);
    for (int i = 0; i < 4; ++i) {
        if (!c.entry[i]) continue;
        const int prev = (i + 3) % 4, next = (i + 1) % 4;
        b.connect(c.id[i], c.id[c.entry[next] ? prev : next]);
    }
    return b.build();
}

Web merge_web(int o) {
    WebBuilder b({o, o}, {-o});
    const int v = b.add_vertex(o > 0 ? VKind::Sink : VKind::Source, 0.5, 0.5);
    b.connect(b.bottom_point(0), v);
    b.connect(b.bottom_point(1), v);
    b.connect(b.top_point(0), v);
    return b.build();
}

Web split_web(int o) {
    WebBuilder b({o}, {-o, -o});
    const int v = b.add_vertex(o > 0 ? VKind::Sink : VKind::Source, 0.5, 0.5);
    b.connect(b.bottom_point(0), v);
    b.connect(b.top_point(0), v);
    b.connect(b.top_point(1), v);
    return b.build();
}

int crossing_sign(int geom, int o1, int o2) {
    // Direction vectors of the two strands, following their orientation.
    const int s1x = o1 > 0 ? 1 : -1, s1y = o1 > 0 ? 1 : -1;   // BL - TR
    const int s2x = o2 > 0 ? -1 : 1, s2y = o2 > 0 ? 1 : -1;   // BR - TL
    const int ox = geom > 0 ? s1x : s2x, oy = geom > 0 ? s1y : s2y;
    const int ux = geom > 0 ? s2x : s1x, uy = geom > 0 ? s2y : s1y;
    return (ox * uy - oy * ux) > 0 ? 1 : -1;
}

WebElement crossing_expand(int geom, int o1, int o2) {
    if (geom != 1 && geom != -1) throw std::invalid_argument("crossing geometry must be +1 or -1");
    const int s = crossing_sign(geom, o1, o2);
    WebElement x({o1, o2}, {o2, o1});
    x.add(smoothing_web(o1, o2), RationalFunction(q_pow(s, 3)));
    x.add(i_web(o1, o2), RationalFunction(-q_pow(-s, 6)));
    return x;
}

// ------------------------------------------------------------ composition

WebElement web_compose(const WebElement& f, const WebElement& g, std::size_t max_terms) {
    if (f.top() != g.bottom()) throw SizeMismatch("web_compose: codomain/domain mismatch");
    WebElement out(f.bottom(), g.top());
    WebElement::Terms acc;
    for (const auto& [kf, ef] : f.terms()) {
        for (const auto& [kg, eg] : g.terms()) {
            auto [w, loops] = glue(ef.web, eg.web);
            RationalFunction c = ef.coeff * eg.coeff;
            if (loops) c *= RationalFunction(three_power(loops));
            reduce_into(w, c, acc);
        }
        check_cap(acc.size(), max_terms);
    }
    for (auto& [k, e] : acc) out.add_reduced(e.web, e.coeff);
    return out;
}

Web web_glue(const Web& f, const Web& g, int& loops) {
    auto [w, l] = glue(f, g);
    loops = l;
    return std::move(w);
}

Web web_juxtapose(const Web& f, const Web& g) { return tensor_webs(f, g); }

WebElement web_tensor(const WebElement& f, const WebElement& g) {
    Orientation bottom = f.bottom(), top = f.top();
    bottom.insert(bottom.end(), g.bottom().begin(), g.bottom().end());
    top.insert(top.end(), g.top().begin(), g.top().end());
    WebElement out(bottom, top);
    for (const auto& [kf, ef] : f.terms())
        for (const auto& [kg, eg] : g.terms()) out.add_reduced(tensor_webs(ef.web, eg.web), ef.coeff * eg.coeff);
    return out;
}

WebElement web_apply(const WebElement& f, const WebElement& g, int p, std::size_t max_terms) {
    const int w = static_cast<int>(f.top().size());
    const int k = static_cast<int>(g.bottom().size());
    if (p < 0 || p + k > w) throw SizeMismatch("local web does not fit at position " + std::to_string(p));
    WebElement padded = g;
    if (p > 0) {
        Orientation left(f.top().begin(), f.top().begin() + p);
        padded = web_tensor(WebElement::identity(left), padded);
    }
    if (w - p - k > 0) {
        Orientation right(f.top().begin() + p + k, f.top().end());
        padded = web_tensor(padded, WebElement::identity(right));
    }
    return web_compose(f, padded, max_terms);
}

namespace {

Web rotate_web(const Web& w) {
    Web r = w;
    r.a = w.b;
    r.b = w.a;
    r.bottom.assign(w.top.rbegin(), w.top.rend());
    for (auto& o : r.bottom) o = -o;
    r.top.assign(w.bottom.rbegin(), w.bottom.rend());
    for (auto& o : r.top) o = -o;
    r.boundary.clear();
    for (int i = w.b - 1; i >= 0; --i) r.boundary.push_back(w.boundary[static_cast<std::size_t>(w.a + i)]);
    for (int i = w.a - 1; i >= 0; --i) r.boundary.push_back(w.boundary[static_cast<std::size_t>(i)]);
    return r;
}

Web reverse_web(const Web& w) {
    Web r = w;
    for (auto& k : r.kind) {
        if (k == VKind::Sink) k = VKind::Source;
        else if (k == VKind::Source) k = VKind::Sink;
    }
    for (auto& o : r.bottom) o = -o;
    for (auto& o : r.top) o = -o;
    return r;
}

}  // namespace

WebElement rotate180(const WebElement& x) {
    Orientation bottom(x.top().rbegin(), x.top().rend()), top(x.bottom().rbegin(), x.bottom().rend());
    for (auto& o : bottom) o = -o;
    for (auto& o : top) o = -o;
    WebElement out(bottom, top);
    for (const auto& [k, e] : x.terms()) out.add_reduced(rotate_web(e.web), e.coeff);
    return out;
}

WebElement reverse(const WebElement& x) {
    Orientation bottom = x.bottom(), top = x.top();
    for (auto& o : bottom) o = -o;
    for (auto& o : top) o = -o;
    WebElement out(bottom, top);
    for (const auto& [k, e] : x.terms()) out.add_reduced(reverse_web(e.web), e.coeff);
    return out;
}

RationalFunction web_reduce_closed(const Web& w) {
    if (w.a != 0 || w.b != 0) throw NotClosed("web_reduce_closed: web has boundary");
    WebElement::Terms acc;
    reduce_into(w, RationalFunction(1), acc);
    if (acc.empty()) return {};
    if (acc.size() != 1) throw Irreducible("closed web did not reduce to a scalar");
    return acc.begin()->second.coeff;
}

RationalFunction web_reduce_closed_shuffled(const Web& w, unsigned seed) {
    if (w.a != 0 || w.b != 0) throw NotClosed("web_reduce_closed: web has boundary");
    std::mt19937 rng(seed);
    WebElement::Terms acc;
    reduce_into(w, RationalFunction(1), acc, [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    });
    if (acc.empty()) return {};
    if (acc.size() != 1) throw Irreducible("closed web did not reduce to a scalar");
    return acc.begin()->second.coeff;
}

// ----------------------------------------------------------------- clasps

WebElement a2_clasp(int n, int o) {
    if (n < 1) throw std::invalid_argument("clasp size must be positive");
    static std::mutex mu;
    static std::map<std::pair<int, int>, WebElement> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, o});
        if (it != cache.end()) return it->second;
    }
    WebElement result = WebElement::identity(Orientation(static_cast<std::size_t>(n), o));
    if (n >= 2) {
        WebElement prev = web_tensor(a2_clasp(n - 1, o), WebElement::identity({o}));
        WebElement h = WebElement::identity(Orientation(static_cast<std::size_t>(n), o));
        h = web_apply(h, WebElement::from_web(i_web(o, o)), n - 2);
        WebElement sandwich = web_compose(web_compose(prev, h), prev);
        RationalFunction coeff(-quantum_integer(n - 1), quantum_integer(n));
        result = prev + sandwich.scaled(coeff);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(n, o), result);
    return result;
}

std::pair<WebElement, LaurentPoly> a2_clasp_scaled(int n, int o) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::pair<WebElement, LaurentPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, o});
        if (it != cache.end()) return it->second;
    }
    WebElement f = a2_clasp(n, o);
    LaurentPoly d(1);
    for (const auto& [k, e] : f.terms()) {
        LaurentPoly g = poly_gcd(d, e.coeff.den());
        d = d * exact_div(e.coeff.den(), g);
    }
    WebElement scaled = f.scaled(RationalFunction(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(n, o), std::make_pair(scaled, d)).first->second;
}

WebElement colored_vertex(VertexKind kind, int n, int m) {
    if (n < 1) throw std::invalid_argument("colored vertex needs n >= 1");
    if (kind == VertexKind::Quadrivalent) {
        if (m < 1) throw std::invalid_argument("colored 4-valent vertex needs m >= 1");
        WebElement x = WebElement::identity(Orientation(static_cast<std::size_t>(n + m), 1));
        for (int i = n - 1; i >= 0; --i)
            for (int j = 0; j < m; ++j) x = web_apply(x, WebElement::from_web(i_web(1, 1)), i + j);
        return x;
    }
    WebElement v = WebElement::from_web(split_web(1));
    for (int k = 2; k <= n; ++k) {
        // previous vertex on the left k-1 strands, new strand on the right
        v = web_tensor(v, WebElement::identity({1}));
        v = web_apply(v, WebElement::from_web(split_web(1)), 2 * k - 2);
        for (int p = 2 * k - 3; p >= k - 1; --p) v = web_apply(v, WebElement::from_web(i_web(-1, -1)), p);
    }
    return v;
}

// ------------------------------------------------------------------ Sweep

Sweep::Sweep(const Orientation& bottom, std::size_t max_terms)
    : state_(bottom.empty() ? WebElement::scalar(1) : WebElement::identity(bottom)), scale_(1), max_terms_(max_terms) {}

void Sweep::apply(const WebElement& g, int p) { state_ = web_apply(state_, g, p, max_terms_); }

void Sweep::cup(int p, int o) { apply(WebElement::from_web(cup_web(o)), p); }

void Sweep::cap(int p) {
    const int o = top()[static_cast<std::size_t>(p)];
    apply(WebElement::from_web(cap_web(o)), p);
}

void Sweep::crossing(int p, int geom) {
    const int o1 = top()[static_cast<std::size_t>(p)], o2 = top()[static_cast<std::size_t>(p + 1)];
    apply(crossing_expand(geom, o1, o2), p);
}

void Sweep::clasp(int p, int n) {
    if (n <= 1) return;
    const int o = top()[static_cast<std::size_t>(p)];
    for (int i = 0; i < n; ++i)
        if (top()[static_cast<std::size_t>(p + i)] != o) throw SizeMismatch("clasp on strands of mixed orientation");
    const auto& [f, d] = a2_clasp_scaled(n, o);
    apply(f, p);
    scale_ *= d;
}

void Sweep::cable_cup(int p, int n, int o) {
    Orientation top(static_cast<std::size_t>(n), o);
    top.insert(top.end(), static_cast<std::size_t>(n), -o);
    WebBuilder b({}, top);
    for (int i = 0; i < n; ++i) b.connect(b.top_point(i), b.top_point(2 * n - 1 - i));
    apply(WebElement::from_web(b.build()), p);
}

void Sweep::cable_cap(int p, int n) {
    Orientation bottom(top().begin() + p, top().begin() + p + 2 * n);
    WebBuilder b(bottom, {});
    for (int i = 0; i < n; ++i) b.connect(b.bottom_point(i), b.bottom_point(2 * n - 1 - i));
    apply(WebElement::from_web(b.build()), p);
}

void Sweep::cable_crossing(int p, int n, int geom) {
    for (int i = n - 1; i >= 0; --i)
        for (int j = 0; j < n; ++j) crossing(p + i + j, geom);
}

WebElement Sweep::result() const {
    if (scale_.is_one()) return state_;
    return state_.scaled(RationalFunction(LaurentPoly(1), scale_));
}

RationalFunction Sweep::closed_value() const {
    if (!state_.top().empty() || !state_.bottom().empty()) throw NotClosed("web diagram has open boundary");
    return RationalFunction(as_laurent(state_.scalar_value()), scale_);
}

// ----------------------------------------------------------------- oracle

RationalFunction oracle_raw_bracket_two_bridge_sl3(const TwoBridgeSpec& spec, int n, std::size_t max_terms) {
    if (n < 0) throw std::invalid_argument("color must be nonnegative");
    if (n == 0) return RationalFunction(1);
    Sweep sweep({}, max_terms);
    using K = TemplateStep::Kind;
    for (const auto& step : two_bridge_template(spec)) {
        const int p = step.block * n;
        switch (step.kind) {
            case K::CableCup: sweep.cable_cup(p, n, -1); break;
            case K::Projector: sweep.clasp(p, n); break;
            case K::CableCrossing: sweep.cable_crossing(p, n, step.sign); break;
            case K::CableCap: sweep.cable_cap(p, n); break;
        }
    }
    return sweep.closed_value();
}

long template_writhe(const TwoBridgeSpec& spec) {
    Orientation o = {-1, 1, -1, 1};
    long w = 0;
    for (std::size_t j = 0; j < spec.a.size(); ++j) {
        const int left = (j % 2 == 0) ? 1 : 2;
        const int geom = spec.a[j] > 0 ? 1 : -1;
        for (long c = 0; c < 2 * std::labs(spec.a[j]); ++c) {
            w += crossing_sign(geom, o[static_cast<std::size_t>(left)], o[static_cast<std::size_t>(left + 1)]);
            std::swap(o[static_cast<std::size_t>(left)], o[static_cast<std::size_t>(left + 1)]);
        }
    }
    return w;
}

RationalFunction oracle_bracket_two_bridge_sl3(const TwoBridgeSpec& spec, int n, std::size_t max_terms) {
    if (n == 0) return RationalFunction(1);
    RationalFunction raw = oracle_raw_bracket_two_bridge_sl3(spec, n, max_terms);
    const long writhe = template_writhe(spec);
    LaurentPoly framing = LaurentPoly::monomial(-writhe * t_exponent(static_cast<long>(n) * n + 3L * n, 3));
    RationalFunction loop(quantum_integer(n + 1) * quantum_integer(n + 2), quantum_integer(2));
    return raw * RationalFunction(framing) / loop;
}

}  // namespace skein::a2
