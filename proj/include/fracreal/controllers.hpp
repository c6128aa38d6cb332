#pragma once

// Rational realizations of the fractional-order controller families, on the
// numeric (BigRat) and symbolic (ParamPoly) paths. The builders are templated
// on the coefficient ring so both paths share one construction.

#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>

#include "fracreal/approx.hpp"

namespace fracreal {

enum class Range { low, high };
enum class Action { integrator, differentiator };

/// s^-order (integrator) or s^order (differentiator) via the low-frequency
/// generating function (1 + 1/s)^order or the high-frequency one (1 + sT)^-order.
struct Differintegrator {
    BigRat order;
    Action action = Action::integrator;
    Range range = Range::low;
    BigRat T{1};
};

/// Kp + Ki / s^lambda + Kd s^mu
struct Fopid {
    BigRat kp, ki, kd, lambda, mu;
};

/// (Kp + Kd s)^mu
struct FopdBracket {
    BigRat kp, kd, mu;
};

/// Kc x^alpha ((lambda s + 1) / (x lambda s + 1))^alpha
struct LeadLag {
    BigRat kc, lambda, x, alpha;
};

using ControllerSpec = std::variant<Differintegrator, Fopid, FopdBracket, LeadLag>;

/// Throws ValidationError naming the violated parameter range.
void validate(const ControllerSpec& spec);

inline constexpr std::size_t kMaxValidatedOrder = 5;

// ---------------------------------------------------------------------------
// Ring-generic builders
// ---------------------------------------------------------------------------

template <Coefficient C>
TransferFunction<C> differintegrator_tf(const C& order, Action action, Range range, const C& time_constant,
                                        std::size_t n) {
    if (n < 1) throw ValidationError("realization order must be at least 1");
    TransferFunction<C> tf;
    if (range == Range::low) {
        // (1 + v)^order about v = 0 with v = 1/s, then multiply through by s^n.
        tf = pade(binomial_series(order, 2 * n), n, n);
        tf.num = tf.num.reversed(n);
        tf.den = tf.den.reversed(n);
    } else {
        // (1 + u)^-order about u = 0 with u = T s.
        tf = pade(binomial_series(C(BigRat(0)) - order, 2 * n), n, n);
        tf.num = tf.num.scaled_argument(time_constant);
        tf.den = tf.den.scaled_argument(time_constant);
    }
    if (action == Action::differentiator) std::swap(tf.num, tf.den);
    tf.beyond_validation = n > kMaxValidatedOrder;
    return normalize(std::move(tf));
}

/// Kp + Ki Q_int(lambda) + Kd Q_diff(mu) over the common denominator.
template <Coefficient C>
TransferFunction<C> fopid_tf(const C& kp, const C& ki, const C& kd, const C& lambda, const C& mu, Range range,
                             std::size_t n) {
    const C one = C(BigRat(1));
    const auto qi = differintegrator_tf(lambda, Action::integrator, range, one, n);
    const auto qd = differintegrator_tf(mu, Action::differentiator, range, one, n);
    TransferFunction<C> tf;
    tf.num = kp * (qi.den * qd.den) + ki * (qi.num * qd.den) + kd * (qd.num * qi.den);
    tf.den = qi.den * qd.den;
    tf.pade_defect = qi.pade_defect + qd.pade_defect;
    tf.beyond_validation = n > kMaxValidatedOrder;
    if constexpr (std::is_same_v<C, BigRat>)
        return normalize(std::move(tf));
    else
        return normalize_content(std::move(tf));
}

/// (Kp + Kd s)^(mu_int + mu_frac) = Kp^mu_frac (1 + (Kd/Kp) s)^mu_frac (Kp + Kd s)^mu_int.
/// The fractional factor is the [n/n] Padé approximant in u = (Kd/Kp) s, scaled
/// by Kp^n so that coefficient k carries Kd^k Kp^(n-k). The Kp^mu_frac
/// prefactor is left to the caller's gain tag.
template <Coefficient C>
TransferFunction<C> fopd_bracket_tf(const C& kp, const C& kd, const C& mu_frac, unsigned mu_int, std::size_t n) {
    if (n < 1) throw ValidationError("realization order must be at least 1");
    if (is_zero(kp)) throw MathError("not expandable about s=0");
    TransferFunction<C> tf = pade(binomial_series(mu_frac, 2 * n), n, n);
    auto scale = [&](const Poly<C>& p) {
        std::vector<C> out(n + 1, C(BigRat(0)));
        C kd_pow = C(BigRat(1));
        for (std::size_t k = 0; k <= n; ++k) {
            C kp_pow = C(BigRat(1));
            for (std::size_t i = k; i < n; ++i) kp_pow = kp_pow * kp;
            out[k] = p[k] * kd_pow * kp_pow;
            kd_pow = kd_pow * kd;
        }
        return Poly<C>(std::move(out));
    };
    tf.num = scale(tf.num) * pow(Poly<C>::affine(kp, kd), mu_int);
    tf.den = scale(tf.den);
    tf.beyond_validation = n > kMaxValidatedOrder;
    if constexpr (std::is_same_v<C, BigRat>)
        return normalize(std::move(tf));
    else
        return normalize_content(std::move(tf));
}

/// ((1 + w)/(1 + x w))^alpha as an [n/n] Padé approximant in w, then w = lambda s.
/// The Kc x^alpha prefactor is left to the caller's gain tag.
template <Coefficient C>
TransferFunction<C> leadlag_tf(const C& lambda, const C& x, const C& alpha, std::size_t n) {
    if (n < 1) throw ValidationError("realization order must be at least 1");
    TransferFunction<C> tf = pade(leadlag_kernel_series(alpha, x, 2 * n), n, n);
    tf.num = tf.num.scaled_argument(lambda);
    tf.den = tf.den.scaled_argument(lambda);
    tf.beyond_validation = n > kMaxValidatedOrder;
    if constexpr (std::is_same_v<C, BigRat>)
        return normalize(std::move(tf));
    else
        return normalize_content(std::move(tf));
}

// ---------------------------------------------------------------------------
// Numeric realizations (validated parameters, gain tags evaluated)
// ---------------------------------------------------------------------------

RatTf realize_differintegrator(const Differintegrator& spec, std::size_t n);
RatTf realize_fopid(const Fopid& spec, Range range, std::size_t n);
RatTf realize_fopd_bracket(const FopdBracket& spec, std::size_t n);
RatTf realize_leadlag(const LeadLag& spec, std::size_t n);

/// Dispatches on the spec; `range` applies to the differintegrator parts of
/// Differintegrator (overridden by its own field) and Fopid.
RatTf realize(const ControllerSpec& spec, Range range, std::size_t n);

// ---------------------------------------------------------------------------
// Symbolic realizations (every parameter a symbol)
// ---------------------------------------------------------------------------

/// Coefficients are polynomials in lambda; T is fixed to 1.
SymTf symbolic_differintegrator(Range range, std::size_t n, Action action);
/// Polynomials in Kp, Ki, Kd, lambda, mu.
SymTf symbolic_fopid(Range range, std::size_t n);
/// Polynomials in Kp, Kd, mu with mu taken as the fractional exponent; gain tag "Kp^mu".
SymTf symbolic_fopd_bracket(std::size_t n);
/// Polynomials in lambda, x, alpha; gain tag "Kc*x^alpha".
SymTf symbolic_leadlag(std::size_t n);

/// Parameter values of a spec as a symbol assignment (for substituting into
/// the symbolic forms). Differintegrator maps its order to lambda.
Assignment assignment_of(const ControllerSpec& spec);

std::string to_string(Range r);
std::string to_string(Action a);

}  // namespace fracreal
