/**
 * @file jones_2bridge.cpp
 * @brief Region transfers and the closed formulas for 2-bridge colored Jones polynomials.
 */
#include "skein/jones_2bridge.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <tuple>

#include "skein/qcombinatorics.hpp"

namespace skein {

// ---------------------------------------------------------------- parsing

TwoBridgeSpec parse_spec(const std::string& text, SpecInput mode) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty link specification");
    std::vector<long> values;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw ParseError("empty entry in link specification '" + text + "'");
        char* end = nullptr;
        errno = 0;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (errno != 0 || end != tok.c_str() + tok.size())
            throw ParseError("not an integer: '" + tok + "'");
        if (v == 0) throw ParseError("zero entry in link specification");
        if (mode == SpecInput::CrossingCounts) {
            if (v % 2 != 0) throw ParseError("odd crossing count " + tok + " (entries must be 2a_j)");
            values.push_back(v / 2);
        } else {
            values.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return TwoBridgeSpec(std::move(values));
}

long writhe(const TwoBridgeSpec& spec) {
    long s = 0;
    for (long x : spec.a) s += x;
    return -2 * s;
}

int component_count(const TwoBridgeSpec& spec) { return trace_two_bridge_template(spec).components; }

TwoBridgeSpec mirror(const TwoBridgeSpec& spec) {
    std::vector<long> m = spec.a;
    for (auto& x : m) x = -x;
    return TwoBridgeSpec(std::move(m));
}

// ------------------------------------------------------------ region data

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

/**
 * Exponent of t in the inverse framing share of one right-handed twist step:
 * q^{-(n^2+2n)/2} (sl2) or q^{-2(n^2+3n)/3} (sl3). A region with 2|a| crossings
 * carries |a| of them, so that the product over all regions cancels the framing
 * factor applied by colored_jones.
 */
long unframe_step(Algebra alg, long n) {
    return alg == Algebra::A1 ? -t_exponent(n * n + 2 * n, 2) : -t_exponent(2 * (n * n + 3 * n), 3);
}

/**
 * Right-handed (epsilon = +1) weight of one chain K = k_0 >= ... >= k_m, framing included.
 * sl2: (-1)^{K-k_m} q^{(K-k_m)/2} q^{sum(k_i^2+k_i)} (q)_K/(q)_{k_m} (K; k_1', ..., k_m', k_m)_q
 * sl3: q^{K-k_m} q^{sum(k_i^2+2k_i)} (q)_K/(q)_{k_m} (K; k_1', ..., k_m', k_m)_q
 */
LaurentPoly chain_weight(Algebra alg, const std::vector<long>& c) {
    const long K = c.front(), km = c.back();
    long sq = 0, lin = 0;
    std::vector<long> parts;
    for (std::size_t i = 1; i < c.size(); ++i) {
        sq += c[i] * c[i];
        lin += c[i];
        parts.push_back(c[i - 1] - c[i]);
    }
    parts.push_back(km);
    LaurentPoly base = exact_div(pochhammer(K), pochhammer(km)) * gauss_multinomial(K, parts);
    if (alg == Algebra::A1) return LaurentPoly::monomial(t_exponent(K - km + 2 * (sq + lin), 2), parity_sign(K - km)) * base;
    return LaurentPoly::monomial(t_exponent(K - km + sq + 2 * lin, 1)) * base;
}

/// Right-handed single-step weight from label x to y.
LaurentPoly step_weight(Algebra alg, long x, long y) {
    LaurentPoly base = exact_div(pochhammer(x), pochhammer(y)) * gauss_binomial(x, y);
    if (alg == Algebra::A1) return LaurentPoly::monomial(t_exponent(x - y + 2 * (y * y + y), 2), parity_sign(x - y)) * base;
    return LaurentPoly::monomial(t_exponent(x - y + y * y + 2 * y, 1)) * base;
}

void check_region_args(int n, int K, long a) {
    if (n < 0 || K < 0 || K > n) throw OutOfRange("region label K outside [0, n]");
    if (a == 0) throw OutOfRange("twist parameter a must be nonzero");
}

std::map<int, RationalFunction> orient(int n, std::vector<LaurentPoly> by_km, long a) {
    std::map<int, RationalFunction> out;
    for (int km = 0; km < static_cast<int>(by_km.size()); ++km) {
        const auto& w = by_km[static_cast<std::size_t>(km)];
        if (w.is_zero()) continue;
        out.emplace(n - km, RationalFunction(a > 0 ? w : w.substitute_inverse()));
    }
    return out;
}

}  // namespace

std::map<int, RationalFunction> region_transfer_chain(Algebra alg, int n, int K, long a) {
    check_region_args(n, K, a);
    const long m = std::labs(a);
    const LaurentPoly unframe = LaurentPoly::monomial(m * unframe_step(alg, n));
    std::vector<LaurentPoly> acc(static_cast<std::size_t>(K) + 1);
    std::vector<long> chain(static_cast<std::size_t>(m) + 1);
    chain[0] = K;
    std::function<void(long)> rec = [&](long i) {
        if (i > m) {
            acc[static_cast<std::size_t>(chain.back())] += chain_weight(alg, chain) * unframe;
            return;
        }
        for (long k = 0; k <= chain[static_cast<std::size_t>(i - 1)]; ++k) {
            chain[static_cast<std::size_t>(i)] = k;
            rec(i + 1);
        }
    };
    rec(1);
    return orient(n, std::move(acc), a);
}

std::map<int, RationalFunction> region_transfer_matrix(Algebra alg, int n, int K, long a) {
    check_region_args(n, K, a);
    std::vector<LaurentPoly> v(static_cast<std::size_t>(K) + 1);
    v[static_cast<std::size_t>(K)] = LaurentPoly(1);
    const LaurentPoly unframe = LaurentPoly::monomial(unframe_step(alg, n));
    for (long step = 0; step < std::labs(a); ++step) {
        std::vector<LaurentPoly> w(v.size());
        for (long x = 0; x <= K; ++x) {
            if (v[static_cast<std::size_t>(x)].is_zero()) continue;
            for (long y = 0; y <= x; ++y) w[static_cast<std::size_t>(y)] += v[static_cast<std::size_t>(x)] * step_weight(alg, x, y) * unframe;
        }
        v = std::move(w);
    }
    return orient(n, std::move(v), a);
}

std::map<int, RationalFunction> region_transfer(Algebra alg, int n, int K, long a) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, long>, std::map<int, RationalFunction>> cache;
    const auto key = std::make_tuple(static_cast<int>(alg), n, K, a);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto chain = region_transfer_chain(alg, n, K, a);
    auto matrix = region_transfer_matrix(alg, n, K, a);
    if (chain != matrix)
        throw InternalMismatch("region transfer mismatch for (" + std::string(algebra_name(alg)) + ", n=" +
                               std::to_string(n) + ", K=" + std::to_string(K) + ", a=" + std::to_string(a) + ")");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, chain);
    return chain;
}

// ------------------------------------------------------------ invariants

LaurentPoly framing_factor(Algebra alg, int n, long w) {
    const long N = n;
    if (alg == Algebra::A1) {
        const int sign = (N % 2 != 0 && w % 2 != 0) ? -1 : 1;
        return LaurentPoly::monomial(-w * t_exponent(N * N + 2 * N, 4), sign);
    }
    return LaurentPoly::monomial(-w * t_exponent(N * N + 3 * N, 3));
}

RationalFunction colored_jones_rational(Algebra alg, const TwoBridgeSpec& spec, int n) {
    if (n < 0) throw OutOfRange("color must be nonnegative");
    std::vector<RationalFunction> v(static_cast<std::size_t>(n) + 1);
    v[static_cast<std::size_t>(n)] = RationalFunction(1);
    for (long a : spec.a) {
        std::vector<RationalFunction> w(v.size());
        for (int K = 0; K <= n; ++K) {
            if (v[static_cast<std::size_t>(K)].is_zero()) continue;
            for (const auto& [Kp, c] : region_transfer(alg, n, K, a)) w[static_cast<std::size_t>(Kp)] += v[static_cast<std::size_t>(K)] * c;
        }
        v = std::move(w);
    }
    RationalFunction total;
    for (int K = 0; K <= n; ++K)
        if (!v[static_cast<std::size_t>(K)].is_zero()) total += v[static_cast<std::size_t>(K)] * closure_scalar(alg, n, K);
    return total * RationalFunction(framing_factor(alg, n, writhe(spec)));
}

JonesResult colored_jones(Algebra alg, const TwoBridgeSpec& spec, int n) {
    JonesResult r;
    r.algebra = alg;
    r.n = n;
    r.spec = spec;
    r.writhe = writhe(spec);
    r.components = component_count(spec);
    LaurentPoly f = framing_factor(alg, n, r.writhe);
    r.framing_exponent_applied = f.min_exp();
    r.framing_sign = f.leading_coeff() > 0 ? 1 : -1;
    r.polynomial = as_laurent(colored_jones_rational(alg, spec, n));
    return r;
}

const char* algebra_name(Algebra alg) { return alg == Algebra::A1 ? "sl2" : "sl3"; }

Algebra algebra_from_name(const std::string& name) {
    if (name == "sl2" || name == "A1") return Algebra::A1;
    if (name == "sl3" || name == "A2") return Algebra::A2;
    throw ParseError("unknown algebra '" + name + "' (expected sl2 or sl3)");
}

nlohmann::json to_json(const JonesResult& r) {
    return {{"algebra", algebra_name(r.algebra)},
            {"n", r.n},
            {"spec", r.spec.a},
            {"link", r.spec.to_string()},
            {"writhe", r.writhe},
            {"components", r.components},
            {"framing", {{"t_exponent", r.framing_exponent_applied}, {"sign", r.framing_sign}}},
            {"polynomial", to_json(r.polynomial)},
            {"display", r.polynomial.to_string()}};
}

JonesResult jones_result_from_json(const nlohmann::json& j) {
    JonesResult r;
    r.algebra = algebra_from_name(j.at("algebra").get<std::string>());
    r.n = j.at("n").get<int>();
    r.spec = TwoBridgeSpec(j.at("spec").get<std::vector<long>>());
    r.writhe = j.at("writhe").get<long>();
    r.components = j.at("components").get<int>();
    r.framing_exponent_applied = j.at("framing").at("t_exponent").get<long>();
    r.framing_sign = j.at("framing").at("sign").get<int>();
    r.polynomial = laurent_from_json(j.at("polynomial"));
    return r;
}

}  // namespace skein
