#pragma once

// Exact arithmetic substrate: arbitrary-precision rationals and sparse
// multivariate polynomials over the controller-parameter symbols.

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fracreal/errors.hpp"

namespace fracreal {

// ---------------------------------------------------------------------------
// BigRat
// ---------------------------------------------------------------------------

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class BigRat {
public:
    BigRat() = default;
    BigRat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(long num, long den);
    explicit BigRat(mpq_class v);

    /// Parses "p", "p/q", or a decimal literal such as "-0.6404" or "1.5e-3".
    /// Decimal input is converted exactly (0.6404 -> 1601/2500).
    static BigRat parse(std::string_view text);
    /// Exact binary value of a finite double.
    static BigRat from_double(double v);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// Integer floor.
    [[nodiscard]] long floor() const;

    BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
    BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
    BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.value_)); }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
    friend auto operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

BigRat pow(const BigRat& base, unsigned exponent);
BigRat abs(const BigRat& v);

// ---------------------------------------------------------------------------
// Symbols and monomials
// ---------------------------------------------------------------------------

enum class Symbol : std::uint8_t { lambda, mu, alpha, x, Kp, Ki, Kd, Kc, T };
inline constexpr std::size_t kSymbolCount = 9;

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Exponent vector; ordered graded-lexicographically (total degree first,
/// then exponent of lambda, mu, ... in declaration order).
struct Monomial {
    std::array<std::uint8_t, kSymbolCount> exps{};

    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] unsigned exponent(Symbol s) const { return exps[static_cast<std::size_t>(s)]; }
    [[nodiscard]] bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);
};

// ---------------------------------------------------------------------------
// ParamPoly
// ---------------------------------------------------------------------------

/// Partial assignment of symbols to exact values.
using Assignment = std::map<Symbol, BigRat>;

/// Sparse multivariate polynomial over BigRat. No zero terms are stored.
class ParamPoly {
public:
    using Terms = std::map<Monomial, BigRat>;

    ParamPoly() = default;
    ParamPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

    static ParamPoly var(Symbol s, unsigned power = 1);
    static ParamPoly term(const Monomial& m, const BigRat& c);
    /// Parses expressions like "-20*lambda^3 + 180*lambda^2 - (1/2)*Kp*Kd".
    /// Supports + - * ^ (non-negative integer powers), parentheses, integer and
    /// decimal literals, and the symbol names lambda mu alpha x Kp Ki Kd Kc T.
    static ParamPoly parse(std::string_view text);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Value of the constant term (0 if absent).
    [[nodiscard]] BigRat constant_term() const;
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] unsigned degree_in(Symbol s) const;
    [[nodiscard]] bool contains(Symbol s) const { return degree_in(s) > 0; }
    [[nodiscard]] std::vector<Symbol> symbols() const;
    /// Greatest term in graded-lex order. Requires a nonzero polynomial.
    [[nodiscard]] std::pair<Monomial, BigRat> leading_term() const;

    /// Coefficients with respect to `s`, lowest power first; each free of `s`.
    [[nodiscard]] std::vector<ParamPoly> coefficients_in(Symbol s) const;
    static ParamPoly from_coefficients(Symbol s, std::span<const ParamPoly> coeffs);

    [[nodiscard]] ParamPoly substitute(Symbol s, const ParamPoly& value) const;
    [[nodiscard]] ParamPoly evaluate(const Assignment& values) const;

    [[nodiscard]] std::string to_string() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const BigRat& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Monomial& m, const BigRat& c);

    Terms terms_;
};

ParamPoly pow(const ParamPoly& base, unsigned exponent);

/// Exact quotient a / b; throws MathError("inexact division") when b does not divide a.
ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);

/// Content/primitive split: content * primitive == p, primitive has integer
/// coefficients with collective GCD 1 and a positive coefficient on its
/// greatest graded-lex term. Zero maps to (0, 0).
struct Normalized {
    BigRat content;
    ParamPoly primitive;
};
Normalized poly_normalize(const ParamPoly& p);

/// Rational content shared by a family of polynomials: dividing every member
/// by it yields integer coefficients with collective GCD 1. Sign is positive.
BigRat collective_content(std::span<const ParamPoly> polys);

/// Monic GCD of two polynomials univariate in the same symbol (constants allowed).
/// Throws MathError("gcd undefined") when both are zero and ValidationError when
/// the inputs are not univariate in a common symbol.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

/// Multivariate GCD by recursive primitive pseudo-remainder sequences,
/// returned in poly_normalize's primitive form (gcd(0, 0) == 0).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// GCD of a family, stopping early once it becomes constant.
ParamPoly gcd(std::span<const ParamPoly> polys);

// ---------------------------------------------------------------------------
// ParamFraction
// ---------------------------------------------------------------------------

class ParamFraction {
public:
    ParamFraction() : num_(0), den_(1) {}
    ParamFraction(ParamPoly num);  // NOLINT(google-explicit-constructor)
    ParamFraction(ParamPoly num, ParamPoly den);

    [[nodiscard]] const ParamPoly& num() const { return num_; }
    [[nodiscard]] const ParamPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    /// Cancels the GCD and normalizes the denominator to primitive form.
    [[nodiscard]] ParamFraction reduced() const;
    [[nodiscard]] std::string to_string() const;

    friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b);
    friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b);
    friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b);
    friend ParamFraction operator/(const ParamFraction& a, const ParamFraction& b);
    /// Cross-multiplication equality.
    friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    ParamPoly num_;
    ParamPoly den_;
};

// ---------------------------------------------------------------------------
// Coefficient-ring traits shared by the templated layers above this one.
// ---------------------------------------------------------------------------

inline bool is_zero(const BigRat& v) { return v.is_zero(); }
inline bool is_zero(const ParamPoly& v) { return v.is_zero(); }

/// Exact quotient in the coefficient ring.
inline BigRat exact_quotient(const BigRat& a, const BigRat& b) { return a / b; }
inline ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) { return divide_exact(a, b); }

template <class C>
concept Coefficient = requires(C a, C b, BigRat r) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { C(r) };
    { is_zero(a) } -> std::same_as<bool>;
    { exact_quotient(a, b) } -> std::convertible_to<C>;
};

}  // namespace fracreal
