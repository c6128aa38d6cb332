#pragma once

// Dense univariate polynomials in the Laplace variable s (or an expansion
// variable), templated on the coefficient ring.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fracreal/exact.hpp"

namespace fracreal {

/// Coefficients stored lowest power first; trailing zeros are trimmed.
template <Coefficient C>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }
    /// a + b s
    static Poly affine(const C& a, const C& b) { return Poly(std::vector<C>{a, b}); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<C>& coeffs() const { return c_; }
    /// Coefficient of s^k (zero beyond the degree).
    [[nodiscard]] C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C(BigRat(0)); }
    [[nodiscard]] C leading() const { return c_.empty() ? C(BigRat(0)) : c_.back(); }

    /// s^n p(1/s) for n >= degree: reverses the coefficient order.
    [[nodiscard]] Poly reversed(std::size_t n) const {
        std::vector<C> out(n + 1, C(BigRat(0)));
        for (std::size_t k = 0; k < c_.size(); ++k) out[n - k] = c_[k];
        return Poly(std::move(out));
    }

    /// p(f s): coefficient k multiplied by f^k.
    [[nodiscard]] Poly scaled_argument(const C& f) const {
        std::vector<C> out = c_;
        C power = C(BigRat(1));
        for (auto& v : out) {
            v = v * power;
            power = power * f;
        }
        return Poly(std::move(out));
    }

    template <class F>
    [[nodiscard]] auto map(F&& f) const {
        using R = decltype(f(std::declval<const C&>()));
        std::vector<R> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(f(v));
        return Poly<R>(std::move(out));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(BigRat(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(BigRat(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(BigRat(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const C& s, const Poly& p) {
        std::vector<C> out = p.c_;
        for (auto& v : out) v = s * v;
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && fracreal::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <Coefficient C>
Poly<C> pow(const Poly<C>& base, unsigned exponent) {
    Poly<C> out = Poly<C>::constant(C(BigRat(1)));
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

using RatPoly = Poly<BigRat>;
using SymPoly = Poly<ParamPoly>;

/// Quotient and remainder over the rationals.
struct RatDivision {
    RatPoly quotient;
    RatPoly remainder;
};
RatDivision divmod(const RatPoly& a, const RatPoly& b);

/// Monic GCD over the rationals; gcd(0, 0) throws MathError("gcd undefined").
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Evaluates every coefficient at a full assignment of its symbols.
/// Throws ValidationError if any symbol is left unassigned.
RatPoly evaluate(const SymPoly& p, const Assignment& values);

/// Lifts a rational polynomial into the symbolic ring.
SymPoly lift(const RatPoly& p);

}  // namespace fracreal
