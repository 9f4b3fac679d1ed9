/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in t (t^12 = q) and reduced rational functions over them.
 *
 * Every scalar that appears in the A1 and A2 skein calculus lives in Q(q^{1/12}):
 * the Kauffman relation needs q^{1/4}, the A2 relation q^{1/3} and q^{1/6}, and the
 * quantum integers q^{1/2}. A single formal variable t with t^12 = q houses all of
 * them, so exponents are stored as integers in t-units.
 *
 * Coefficients are arbitrary-precision integers (GMP). Rational coefficients never
 * occur: all divisions are performed exactly at the polynomial level.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skein {

using BigInt = mpz_class;

/// Raised by exact_div when the divisor does not divide the dividend.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by as_laurent when a reduced denominator is not a unit.
struct NotPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a q-exponent cannot be expressed in t-units (12*r not integral).
struct BadExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of t-units in one power of q.
inline constexpr long kTPerQ = 12;

/**
 * @brief Convert the rational q-exponent num/den to an exponent of t.
 * @throws BadExponent if 12*num/den is not an integer.
 */
long t_exponent(long num, long den = 1);

/**
 * @brief A Laurent polynomial sum c_e t^e with nonzero BigInt coefficients.
 *
 * Terms are kept sorted by ascending exponent with no zero coefficients, so
 * structural equality is mathematical equality.
 */
class LaurentPoly {
public:
    using Term = std::pair<long, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c);            // NOLINT(google-explicit-constructor): constants
    LaurentPoly(const BigInt& c);   // NOLINT(google-explicit-constructor)

    /// c * t^e
    static LaurentPoly monomial(long e, const BigInt& c = 1);
    /// c * q^{num/den}; checks that the exponent is representable
    static LaurentPoly q_power(long num, long den = 1, const BigInt& c = 1);
    /// Build from unsorted (exponent, coefficient) pairs; duplicates are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// True iff this is ±t^e (a unit of Z[t, t^-1]).
    bool is_unit() const;
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }
    long min_exp() const;
    long max_exp() const;
    const BigInt& leading_coeff() const;
    const BigInt& trailing_coeff() const;
    BigInt coeff(long e) const;
    /// gcd of all coefficients (nonnegative; 0 for the zero polynomial)
    BigInt content() const;

    /// this * t^e
    LaurentPoly shifted(long e) const;
    /// t -> t^{-1}
    LaurentPoly substitute_inverse() const;
    /// t -> t^k for k > 0 (used to compress or expand the variable)
    LaurentPoly scale_exponents(long k) const;
    /// divide every exponent by k (all must be divisible)
    LaurentPoly compress_exponents(long k) const;
    /// gcd of all exponents after shifting to minimal exponent 0 (0 if monomial)
    long exponent_stride() const;
    LaurentPoly pow(unsigned k) const;
    /// divide every coefficient by c exactly
    LaurentPoly div_scalar(const BigInt& c) const;
    /// evaluate at t = 1
    BigInt eval_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    /// total order used only for deterministic containers
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    /// Human-readable form in q with reduced fractional exponents, e.g. "-q^(3/4) + q^(-1/4)".
    std::string to_string() const;
    /// LaTeX form, e.g. "-q^{3/4} + q^{-1/4}".
    std::string to_latex() const;
    /// Stable hash for use in unordered containers.
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
    void normalize();
};

/**
 * @brief Exact quotient a / b.
 * @throws NotDivisible if the remainder is nonzero.
 * @throws std::domain_error if b is zero.
 */
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// gcd over Z[t, t^-1], normalized to minimal exponent 0 and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/**
 * @brief A reduced quotient num/den of Laurent polynomials.
 *
 * Canonical form: gcd(num, den) is a unit, den has minimal exponent 0 and a
 * positive leading coefficient. Values with den == 1 are Laurent polynomials.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}                // NOLINT
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True iff the reduced denominator is 1 (i.e. the value is a Laurent polynomial).
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction substitute_inverse() const;
    RationalFunction inverse() const;
    RationalFunction pow(int k) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const;
    std::string to_latex() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void canonicalize();
};

/// The substitution t -> t^{-1}, re-canonicalized.
RationalFunction substitute_inverse(const RationalFunction& a);

/**
 * @brief The exact Laurent polynomial equal to a.
 * @throws NotPolynomial when the reduced denominator is not a unit.
 */
LaurentPoly as_laurent(const RationalFunction& a);

/// {"var":"q^(1/12)","terms":[[e,"c"],...]} sorted by exponent.
nlohmann::json to_json(const LaurentPoly& p);
/// Inverse of to_json(LaurentPoly); throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_json(const nlohmann::json& j);
/// {"num":<poly>,"den":<poly>}
nlohmann::json to_json(const RationalFunction& r);
RationalFunction rational_from_json(const nlohmann::json& j);

}  // namespace skein

template <>
struct std::hash<skein::LaurentPoly> {
    std::size_t operator()(const skein::LaurentPoly& p) const noexcept { return p.hash(); }
};
