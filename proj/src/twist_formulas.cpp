/**
 * @file twist_formulas.cpp
 * @brief Closed-form twist, clasp, slide, bubble and closure coefficients.
 */
#include "skein/twist_formulas.hpp"

#include <functional>
#include <string>

#include "skein/qcombinatorics.hpp"

namespace skein {

namespace {

/// sign * q^{num/den}
LaurentPoly signed_q(long num, long den, int sign = 1) {
    return LaurentPoly::monomial(t_exponent(num, den), sign);
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

/// (q)_n / (q)_k for 0 <= k <= n.
LaurentPoly poch_ratio(long n, long k) { return exact_div(pochhammer(n), pochhammer(k)); }

void require_range(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw OutOfRange("index k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

RationalFunction hand(const LaurentPoly& p, Handed h) {
    return h == Handed::Right ? RationalFunction(p) : RationalFunction(p.substitute_inverse());
}

/// Visit every chain n = k_0 >= k_1 >= ... >= k_m >= 0.
void for_each_chain(int n, int m, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> chain(static_cast<std::size_t>(m) + 1);
    chain[0] = n;
    std::function<void(int)> rec = [&](int i) {
        if (i > m) {
            fn(chain);
            return;
        }
        for (long k = 0; k <= chain[static_cast<std::size_t>(i) - 1]; ++k) {
            chain[static_cast<std::size_t>(i)] = k;
            rec(i + 1);
        }
    };
    rec(1);
}

/// Multinomial (k_0; k_0-k_1, ..., k_{m-1}-k_m, k_m)_q.
LaurentPoly chain_multinomial(const std::vector<long>& chain) {
    std::vector<long> parts;
    for (std::size_t i = 1; i < chain.size(); ++i) parts.push_back(chain[i - 1] - chain[i]);
    parts.push_back(chain.back());
    return gauss_multinomial(chain.front(), parts);
}

TwistExpansion finish(int n, std::vector<LaurentPoly> acc, Handed h) {
    TwistExpansion e;
    e.n = n;
    for (int k = 0; k <= n; ++k)
        if (!acc[static_cast<std::size_t>(k)].is_zero()) e.coefficients.emplace(k, hand(acc[static_cast<std::size_t>(k)], h));
    return e;
}

/// Repeated lower-triangular transfer: step(i, x, y) is the weight from label x to y at step i.
TwistExpansion transfer(int n, int m, Handed h, const std::function<LaurentPoly(int, int, int)>& step) {
    std::vector<LaurentPoly> v(static_cast<std::size_t>(n) + 1);
    v[static_cast<std::size_t>(n)] = LaurentPoly(1);
    for (int i = 0; i < m; ++i) {
        std::vector<LaurentPoly> w(static_cast<std::size_t>(n) + 1);
        for (int x = 0; x <= n; ++x) {
            if (v[static_cast<std::size_t>(x)].is_zero()) continue;
            for (int y = 0; y <= x; ++y) w[static_cast<std::size_t>(y)] += v[static_cast<std::size_t>(x)] * step(i, x, y);
        }
        v = std::move(w);
    }
    return finish(n, std::move(v), h);
}

LaurentPoly as_poly(const RationalFunction& r) { return as_laurent(r); }

}  // namespace

// ------------------------------------------------------------------- json

nlohmann::json to_json(const TwistExpansion& e) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, c] : e.coefficients) coeffs[std::to_string(k)] = to_json(c);
    return {{"n", e.n}, {"coefficients", coeffs}};
}

TwistExpansion twist_expansion_from_json(const nlohmann::json& j) {
    TwistExpansion e;
    e.n = j.at("n").get<int>();
    for (const auto& [k, c] : j.at("coefficients").items()) e.coefficients.emplace(std::stoi(k), rational_from_json(c));
    return e;
}

// -------------------------------------------------------------------- sl2

RationalFunction twist_coeff_sl2(int n, int k, TwistKind kind, Handed handed) {
    require_range(n, k);
    const long N = n, K = k;
    switch (kind) {
        case TwistKind::Half:
            return hand(signed_q(2 * K * K - N * N, 4) * gauss_binomial(N, K), handed);
        case TwistKind::Full:
            return hand(signed_q(2 * K * K - N * N + K - N, 2, parity_sign(N - K)) * poch_ratio(N, K) *
                            gauss_binomial(N, K),
                        handed);
        default: break;
    }
    throw std::invalid_argument("A1 twists are Half or Full");
}

TwistExpansion multi_twist_expansion_sl2(int n, int m, TwistKind kind, Handed handed) {
    if (n < 0 || m < 0) throw OutOfRange("multi_twist_expansion_sl2 needs n, m >= 0");
    if (kind != TwistKind::Half && kind != TwistKind::Full) throw std::invalid_argument("A1 twists are Half or Full");
    std::vector<LaurentPoly> acc(static_cast<std::size_t>(n) + 1);
    const long N = n, M = m;
    for_each_chain(n, m, [&](const std::vector<long>& c) {
        const long km = c.back();
        long sq = 0, lin = 0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            sq += c[i] * c[i];
            lin += c[i];
        }
        LaurentPoly term;
        if (kind == TwistKind::Half) {
            // (-1)^{mn} q^{-m(n^2+2n)/4} (-1)^{n-k_m} q^{(n-k_m)/2} (-1)^{sum k_i} q^{sum(k_i^2+k_i)/2}
            const long e4 = -M * (N * N + 2 * N) + 2 * (N - km) + 2 * (sq + lin);
            term = signed_q(e4, 4, parity_sign(M * N + N - km + lin)) * chain_multinomial(c);
        } else {
            // q^{-m(n^2+2n)/2} (-1)^{n-k_m} q^{(n-k_m)/2} q^{sum(k_i^2+k_i)} (q)_n/(q)_{k_m}
            const long e2 = -M * (N * N + 2 * N) + (N - km) + 2 * (sq + lin);
            term = signed_q(e2, 2, parity_sign(N - km)) * poch_ratio(N, km) * chain_multinomial(c);
        }
        acc[static_cast<std::size_t>(km)] += term;
    });
    return finish(n, std::move(acc), handed);
}

TwistExpansion multi_twist_expansion_sl2_transfer(int n, int m, TwistKind kind, Handed handed) {
    if (n < 0 || m < 0) throw OutOfRange("multi_twist_expansion_sl2 needs n, m >= 0");
    // Each remaining twist to the left of the current one contributes slide factors
    // (one per half twist) when the turnback is moved through it.
    const int per = (kind == TwistKind::Full) ? 2 : 1;
    return transfer(n, m, handed, [&](int i, int x, int y) {
        LaurentPoly c = as_poly(twist_coeff_sl2(x, y, kind));
        const LaurentPoly s = as_poly(slide_scalar(Algebra::A1, x, y));
        return c * s.pow(static_cast<unsigned>(per * (m - i - 1)));
    });
}

// -------------------------------------------------------------------- sl3

RationalFunction twist_coeff_sl3(int n, int k, TwistKind kind, Handed handed) {
    require_range(n, k);
    const long N = n, K = k;
    switch (kind) {
        case TwistKind::HalfPos:
            return hand(signed_q(2 * N * N - 6 * N * K + 3 * K * K, 6, parity_sign(K)) * gauss_binomial(N, K), handed);
        case TwistKind::HalfNeg:
            return hand(signed_q(-2 * N * N + 3 * K * K, 6, parity_sign(K)) * gauss_binomial(N, K), handed);
        case TwistKind::Full:
            // q^{n^2/3} q^{k^2-n^2+k-n} (q)_n/(q)_k (n k)_q
            return hand(signed_q(N * N + 3 * (K * K - N * N + K - N), 3) * poch_ratio(N, K) * gauss_binomial(N, K),
                        handed);
        default: break;
    }
    throw std::invalid_argument("A2 twists are HalfPos, HalfNeg or Full");
}

TwistExpansion multi_twist_expansion_sl3(int n, int m, Handed handed) {
    if (n < 0 || m < 0) throw OutOfRange("multi_twist_expansion_sl3 needs n, m >= 0");
    std::vector<LaurentPoly> acc(static_cast<std::size_t>(n) + 1);
    const long N = n, M = m;
    for_each_chain(n, m, [&](const std::vector<long>& c) {
        const long km = c.back();
        long s = 0;
        for (std::size_t i = 1; i < c.size(); ++i) s += c[i] * c[i] + 2 * c[i];
        // q^{-2m(n^2+3n)/3} q^{n-k_m} q^{sum(k_i^2+2k_i)} (q)_n/(q)_{k_m}
        const long e3 = -2 * M * (N * N + 3 * N) + 3 * (N - km) + 3 * s;
        acc[static_cast<std::size_t>(km)] += signed_q(e3, 3) * poch_ratio(N, km) * chain_multinomial(c);
    });
    return finish(n, std::move(acc), handed);
}

TwistExpansion multi_twist_expansion_sl3_transfer(int n, int m, Handed handed) {
    if (n < 0 || m < 0) throw OutOfRange("multi_twist_expansion_sl3 needs n, m >= 0");
    return transfer(n, m, handed, [&](int i, int x, int y) {
        LaurentPoly c = as_poly(twist_coeff_sl3(x, y, TwistKind::Full));
        const LaurentPoly s = as_poly(slide_scalar(Algebra::A2, x, y));
        return c * s.pow(static_cast<unsigned>(2 * (m - i - 1)));
    });
}

// ---------------------------------------------------------------- scalars

RationalFunction clasp_scalar(Algebra alg, ClaspQuantity which, int n, int k, Handed handed) {
    if (n < 0) throw OutOfRange("clasp size must be nonnegative");
    const long N = n, K = k;
    const bool a1 = alg == Algebra::A1;
    switch (which) {
        case ClaspQuantity::Crossing:
            require_range(n, k);
            return hand(signed_q(K * (N - K), a1 ? 4 : 3), handed);
        case ClaspQuantity::PartialTrace:
            require_range(n, k);
            if (a1) return {quantum_integer(N + 1) * LaurentPoly(parity_sign(K)), quantum_integer(N - K + 1)};
            return {quantum_integer(N + 1) * quantum_integer(N + 2), quantum_integer(N - K + 1) * quantum_integer(N - K + 2)};
        case ClaspQuantity::Curl:
            if (a1) return hand(signed_q(N * N + 2 * N, 4, parity_sign(N)), handed);
            return hand(signed_q(N * N + 3 * N, 3), handed);
        case ClaspQuantity::Loop:
            if (a1) return RationalFunction(quantum_integer(N + 1) * LaurentPoly(parity_sign(N)));
            return {quantum_integer(N + 1) * quantum_integer(N + 2), quantum_integer(2)};
    }
    throw std::invalid_argument("unknown clasp quantity");
}

RationalFunction slide_scalar(Algebra alg, int n, int k) {
    require_range(n, k);
    const long N = n, K = k;
    if (alg == Algebra::A1) return RationalFunction(signed_q(-(N * N - K * K + 2 * N - 2 * K), 4, parity_sign(N - K)));
    return RationalFunction(signed_q(-(N * N - K * K + 3 * N - 3 * K), 3));
}

RationalFunction bubble_coeff(Algebra alg, int n, int m, int k, int l, int t) {
    if (n < 0 || m < 0 || k < 0 || l < 0 || k > std::min(n, m) || l > std::min(n, m))
        throw OutOfRange("bubble_coeff needs 0 <= k, l <= min(n, m)");
    if (t < std::max(k, l) || t > std::min({k + l, n, m})) return {};
    const long N = n, M = m, K = k, L = l, T = t;
    const long shift = (alg == Algebra::A1) ? 1 : 2;
    LaurentPoly num = bracket_binomial(N, T) * bracket_binomial(M, T) * bracket_binomial(T, K) *
                      bracket_binomial(T, L) * bracket_binomial(N + M - T + shift, N + M - K - L + shift);
    if (alg == Algebra::A1 && (T - K - L) % 2 != 0) num = -num;
    LaurentPoly den = bracket_binomial(N, K) * bracket_binomial(M, K) * bracket_binomial(N, L) * bracket_binomial(M, L);
    return {num, den};
}

RationalFunction closure_scalar(Algebra alg, int n, int k) {
    require_range(n, k);
    const long N = n, K = k;
    auto one_minus = [](long e) { return LaurentPoly(1) - q_pow(e); };
    if (alg == Algebra::A1)
        return RationalFunction(signed_q(K - N, 2, parity_sign(N - K)) * one_minus(N + 1), one_minus(K + 1));
    return RationalFunction(q_pow(K - N) * one_minus(N + 1) * one_minus(N + 2), one_minus(K + 1) * one_minus(K + 2));
}

}  // namespace skein
