#pragma once

// Truncated formal power series and the two kernels expanded by the
// realization pipeline: (1 + v)^e and ((1 + w) / (1 + x w))^alpha.

#include <cstddef>
#include <utility>
#include <vector>

#include "fracreal/exact.hpp"

namespace fracreal {

/// c_0 + c_1 t + ... + c_n t^n with an explicit truncation order n.
/// Trailing zeros are kept: the order is never inferred from the data.
template <Coefficient C>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1, C(BigRat(0))) {}
    explicit PowerSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw ValidationError("a power series needs at least one coefficient");
    }

    [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
    [[nodiscard]] const std::vector<C>& coeffs() const { return c_; }
    C& operator[](std::size_t k) { return c_[k]; }
    const C& operator[](std::size_t k) const { return c_[k]; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

enum class SeriesOp { add, mul, reciprocal, compose };

namespace detail {

inline void require_same_order(std::size_t a, std::size_t b) {
    if (a != b) throw ValidationError("series truncation orders differ");
}

template <Coefficient C>
BigRat invertible_constant(const C& c);

template <>
inline BigRat invertible_constant<BigRat>(const BigRat& c) {
    if (c.is_zero()) throw MathError("no inverse");
    return c;
}

template <>
inline BigRat invertible_constant<ParamPoly>(const ParamPoly& c) {
    if (c.is_zero()) throw MathError("no inverse");
    if (!c.is_constant()) throw MathError("no inverse: leading coefficient is not a unit");
    return c.constant_term();
}

}  // namespace detail

template <Coefficient C>
PowerSeries<C> series_add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    detail::require_same_order(a.order(), b.order());
    PowerSeries<C> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
    return out;
}

template <Coefficient C>
PowerSeries<C> series_mul(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    detail::require_same_order(a.order(), b.order());
    const std::size_t n = a.order();
    PowerSeries<C> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

template <Coefficient C>
PowerSeries<C> series_scale(const C& factor, const PowerSeries<C>& a) {
    PowerSeries<C> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = factor * a[k];
    return out;
}

/// 1/a; requires a_0 to be a nonzero constant.
template <Coefficient C>
PowerSeries<C> series_reciprocal(const PowerSeries<C>& a) {
    const BigRat inv = BigRat(1) / detail::invertible_constant(a[0]);
    const std::size_t n = a.order();
    PowerSeries<C> out(n);
    out[0] = C(inv);
    for (std::size_t k = 1; k <= n; ++k) {
        C acc = C(BigRat(0));
        for (std::size_t j = 1; j <= k; ++j) acc = acc + a[j] * out[k - j];
        out[k] = C(-inv) * acc;
    }
    return out;
}

/// a(b(t)); requires b_0 == 0.
template <Coefficient C>
PowerSeries<C> series_compose(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    detail::require_same_order(a.order(), b.order());
    if (!is_zero(b[0])) throw MathError("composition undefined");
    const std::size_t n = a.order();
    PowerSeries<C> out(n);
    out[0] = a[n];
    for (std::size_t k = n; k-- > 0;) {
        out = series_mul(out, b);
        out[0] = out[0] + a[k];
    }
    return out;
}

template <Coefficient C>
PowerSeries<C> series_combine(const PowerSeries<C>& a, const PowerSeries<C>& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return series_add(a, b);
        case SeriesOp::mul: return series_mul(a, b);
        case SeriesOp::reciprocal:
            detail::require_same_order(a.order(), b.order());
            return series_reciprocal(a);
        case SeriesOp::compose: return series_compose(a, b);
    }
    throw ValidationError("unknown series operation");
}

/// sum t^k / k!
template <Coefficient C>
PowerSeries<C> exp_series(std::size_t n) {
    PowerSeries<C> out(n);
    BigRat term(1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) term /= BigRat(static_cast<long>(k));
        out[k] = C(term);
    }
    return out;
}

/// log(1 + f t) = sum (-1)^{k+1} f^k t^k / k
template <Coefficient C>
PowerSeries<C> log1p_series(std::size_t n, const C& f = C(BigRat(1))) {
    PowerSeries<C> out(n);
    C power = C(BigRat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * f;
        const BigRat w = BigRat((k % 2 == 1) ? 1 : -1, static_cast<long>(k));
        out[k] = C(w) * power;
    }
    return out;
}

/// Generalized binomial series of (1 + t)^e through t^n.
template <Coefficient C>
PowerSeries<C> binomial_series(const C& exponent, std::size_t n) {
    PowerSeries<C> out(n);
    out[0] = C(BigRat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        const C falling = exponent - C(BigRat(static_cast<long>(k - 1)));
        out[k] = C(BigRat(1, static_cast<long>(k))) * out[k - 1] * falling;
    }
    return out;
}

/// Series of ((1 + w) / (1 + x w))^alpha, built as exp(alpha (log(1+w) - log(1+xw))).
template <Coefficient C>
PowerSeries<C> leadlag_kernel_series(const C& alpha, const C& x, std::size_t n) {
    const PowerSeries<C> log_ratio =
        series_add(log1p_series<C>(n), series_scale(C(BigRat(-1)), log1p_series<C>(n, x)));
    return series_compose(exp_series<C>(n), series_scale(alpha, log_ratio));
}

}  // namespace fracreal
