/**
 * @file laurent.cpp
 * @brief Laurent polynomial and rational function arithmetic over GMP integers.
 */
#include "skein/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

using Dense = std::vector<BigInt>;

/// Render a q-exponent e/12 in lowest terms; style selects plain or LaTeX braces.
std::string q_monomial(long e, bool latex) {
    if (e == 0) return "";
    long g = std::gcd(std::labs(e), kTPerQ);
    long num = e / g, den = kTPerQ / g;
    std::ostringstream os;
    os << "q";
    if (den == 1 && num == 1) return os.str();
    if (latex) {
        os << "^{" << num;
        if (den != 1) os << "/" << den;
        os << "}";
    } else if (den == 1) {
        os << "^" << num;
    } else {
        os << "^(" << num << "/" << den << ")";
    }
    return os.str();
}

std::string render(const std::vector<LaurentPoly::Term>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono = q_monomial(e, latex);
        if (mono.empty()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << (latex ? " " : "*");
            os << mono;
        }
    }
    return os.str();
}

/// Dense coefficient vector of p * t^{-p.min_exp()} with exponents divided by stride.
Dense to_dense(const LaurentPoly& p, long shift, long stride) {
    Dense d(static_cast<std::size_t>((p.max_exp() - shift) / stride + 1));
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>((e - shift) / stride)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, long shift, long stride) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (sgn(d[i]) != 0) terms.emplace_back(shift + static_cast<long>(i) * stride, d[i]);
    return LaurentPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

BigInt dense_content(const Dense& d) {
    BigInt g = 0;
    for (const auto& c : d) {
        if (sgn(c) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense& d) {
    BigInt g = dense_content(d);
    if (g == 0 || g == 1) return;
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Pseudo-remainder of a by b (deg a >= deg b), in place on a.
void pseudo_remainder(Dense& a, const Dense& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        BigInt la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
}

/// gcd of two ordinary polynomials over Z (primitive PRS), positive leading coefficient.
Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        make_primitive(a);  // the caller multiplies the content back in
        if (!a.empty() && sgn(a.back()) < 0)
            for (auto& c : a) c = -c;
        return a;
    }
    if (a.size() < b.size()) std::swap(a, b);
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        pseudo_remainder(a, b);
        make_primitive(a);
        std::swap(a, b);
    }
    if (!a.empty() && sgn(a.back()) < 0)
        for (auto& c : a) c = -c;
    return a;
}

}  // namespace

long t_exponent(long num, long den) {
    if (den == 0) throw BadExponent("zero denominator in q-exponent");
    long scaled = num * kTPerQ;
    if (scaled % den != 0)
        throw BadExponent("q^(" + std::to_string(num) + "/" + std::to_string(den) +
                          ") is not an integral power of q^(1/12)");
    return scaled / den;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(long e, const BigInt& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(long num, long den, const BigInt& c) {
    return monomial(t_exponent(num, den), c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    terms_ = std::move(out);
}

bool LaurentPoly::is_unit() const {
    return terms_.size() == 1 && abs(terms_[0].second) == 1;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.front().first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.back().first;
}

const BigInt& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.back().second;
}

const BigInt& LaurentPoly::trailing_coeff() const {
    if (terms_.empty()) throw std::domain_error("trailing coefficient of zero polynomial");
    return terms_.front().second;
}

BigInt LaurentPoly::coeff(long e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, long x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += e;
    return p;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
}

LaurentPoly LaurentPoly::scale_exponents(long k) const {
    if (k <= 0) throw std::invalid_argument("scale_exponents requires k > 0");
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first *= k;
    return p;
}

LaurentPoly LaurentPoly::compress_exponents(long k) const {
    if (k <= 0) throw std::invalid_argument("compress_exponents requires k > 0");
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        if (t.first % k != 0) throw std::invalid_argument("exponent not divisible in compress_exponents");
        t.first /= k;
    }
    return p;
}

long LaurentPoly::exponent_stride() const {
    long g = 0;
    if (terms_.empty()) return 0;
    long base = terms_.front().first;
    for (const auto& t : terms_) g = std::gcd(g, t.first - base);
    return g;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::div_scalar(const BigInt& c) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t()))
            throw NotDivisible("scalar does not divide polynomial");
        mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            BigInt c = i->second + j->second;
            if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1) {
        LaurentPoly p = a;
        for (auto& t : p.terms_) {
            t.first += b.terms_[0].first;
            t.second *= b.terms_[0].second;
        }
        return p;
    }
    if (a.terms_.size() == 1) return b * a;
    const long lo = a.min_exp() + b.min_exp();
    const long span = a.max_exp() + b.max_exp() - lo + 1;
    const auto work = static_cast<long>(a.terms_.size() * b.terms_.size());
    if (span <= 4 * work + 64) {
        Dense acc(static_cast<std::size_t>(span));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                           cb.get_mpz_t());
        return from_dense(acc, lo, 1);
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(work));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
            if (x.first != y.first) return x.first < y.first;
            return cmp(x.second, y.second) < 0;
        });
}

std::string LaurentPoly::to_string() const { return render(terms_, false); }
std::string LaurentPoly::to_latex() const { return render(terms_, true); }

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<long>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<long>{}(c.fits_slong_p() ? c.get_si() : static_cast<long>(mpz_size(c.get_mpz_t()))) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ------------------------------------------------------------ free functions

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.terms().front();
        return a.div_scalar(cb).shifted(-eb);
    }
    const long bmin = b.min_exp(), bmax = b.max_exp();
    const long amin = a.min_exp(), amax = a.max_exp();
    if (amax - amin < bmax - bmin) throw NotDivisible("divisor has larger span than dividend");
    Dense rem = to_dense(a, amin, 1);
    const BigInt& lb = b.leading_coeff();
    std::vector<LaurentPoly::Term> quot;
    for (long e = amax; e >= amin + (bmax - bmin); --e) {
        BigInt& c = rem[static_cast<std::size_t>(e - amin)];
        if (sgn(c) == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) throw NotDivisible("leading coefficient mismatch");
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
        const long qe = e - bmax;
        for (const auto& [eb, cb] : b.terms())
            mpz_submul(rem[static_cast<std::size_t>(qe + eb - amin)].get_mpz_t(), qc.get_mpz_t(), cb.get_mpz_t());
        quot.emplace_back(qe, std::move(qc));
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) throw NotDivisible("nonzero remainder");
    return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& p = a.is_zero() ? b : a;
        LaurentPoly g = p.shifted(-p.min_exp()).div_scalar(p.content());
        return sgn(g.leading_coeff()) < 0 ? -g : g;
    }
    BigInt cont;
    BigInt ca = a.content(), cb = b.content();
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly(cont);
    LaurentPoly pa = a.shifted(-a.min_exp());
    LaurentPoly pb = b.shifted(-b.min_exp());
    long stride = std::gcd(pa.exponent_stride(), pb.exponent_stride());
    if (stride == 0) stride = 1;
    Dense g = dense_gcd(to_dense(pa, 0, stride), to_dense(pb, 0, stride));
    LaurentPoly res = from_dense(g, 0, stride);
    return res * LaurentPoly(cont);
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    // Absorb the monomial part of den into num.
    const long shift = den_.min_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.is_monomial()) {
        BigInt c = den_.leading_coeff();
        BigInt g;
        BigInt cn = num_.content();
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), c.get_mpz_t());
        if (sgn(c) < 0) g = -g;
        num_ = num_.div_scalar(g);
        den_ = LaurentPoly(c / g);
        return;
    }
    // Common case: the quotient is a polynomial.
    try {
        num_ = exact_div(num_, den_);
        den_ = LaurentPoly(1);
        return;
    } catch (const NotDivisible&) {
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const long s2 = den_.min_exp();
    if (s2 != 0) {
        den_ = den_.shifted(-s2);
        num_ = num_.shifted(-s2);
    }
    if (sgn(den_.leading_coeff()) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

RationalFunction RationalFunction::substitute_inverse() const {
    return RationalFunction(num_.substitute_inverse(), den_.substitute_inverse());
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;  // powers of coprime polynomials remain coprime
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) canonicalize();
        else if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalFunction::to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

RationalFunction substitute_inverse(const RationalFunction& a) { return a.substitute_inverse(); }

LaurentPoly as_laurent(const RationalFunction& a) {
    if (a.den().is_one()) return a.num();
    if (a.den().is_unit()) {
        const auto& [e, c] = a.den().terms().front();
        return (a.num() * LaurentPoly(c)).shifted(-e);
    }
    throw NotPolynomial("denominator " + a.den().to_string() + " is not a unit");
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
    return {{"var", "q^(1/12)"}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("var", "") != "q^(1/12)" || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("malformed Laurent polynomial JSON");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw std::invalid_argument("malformed Laurent polynomial term");
        BigInt c;
        if (c.set_str(t[1].get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
        terms.emplace_back(t[0].get<long>(), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

nlohmann::json to_json(const RationalFunction& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalFunction rational_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("malformed rational function JSON");
    return RationalFunction(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

}  // namespace skein
