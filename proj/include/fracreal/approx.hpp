#pragma once

// Padé approximants of power series and Euclidean continued-fraction
// expansion of rational functions.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracreal/linsolve.hpp"
#include "fracreal/poly.hpp"
#include "fracreal/series.hpp"

namespace fracreal {

/// Scalar prefactor that is not rational in the parameters (for example
/// Kp^mu or Kc*x^alpha). It multiplies the rational part and is never
/// expanded into coefficients. `value` is known only on the numeric path.
struct GainTag {
    std::string label;
    std::optional<double> value;

    friend bool operator==(const GainTag&, const GainTag&) = default;
};

/// gain * num(s) / den(s), coefficients lowest power first.
template <Coefficient C>
struct TransferFunction {
    Poly<C> num;
    Poly<C> den;
    std::optional<GainTag> gain;
    /// Rank defect of the Padé system this came from (0 when regular).
    std::size_t pade_defect = 0;
    /// Order above 5: outside the validated range.
    bool beyond_validation = false;
};

using RatTf = TransferFunction<BigRat>;
using SymTf = TransferFunction<ParamPoly>;

/// num1 * den2 == num2 * den1 (gain tags are not compared).
template <Coefficient C>
bool same_rational_function(const TransferFunction<C>& a, const TransferFunction<C>& b) {
    return a.num * b.den == b.num * a.den;
}

/// Cancels common factors and scales to integer-primitive coefficients with a
/// positive leading denominator coefficient (for symbolic coefficients:
/// positive coefficient on its greatest graded-lex term).
RatTf normalize(RatTf tf);
SymTf normalize(SymTf tf);
/// Symbolic variant without the multivariate GCD pass: rational content and
/// sign only. Used where the factors are already known to be coprime.
SymTf normalize_content(SymTf tf);

/// Substitutes a full assignment into a symbolic transfer function.
RatTf evaluate(const SymTf& tf, const Assignment& values);

/// Padé approximant [m/k] of `series` as num/den in the expansion variable.
/// A singular Padé system yields the reduced approximant (free unknowns set to
/// zero) with `pade_defect` recording the rank defect. An inconsistent one
/// falls back along the diagonal to the nearest cell that has an approximant.
template <Coefficient C>
TransferFunction<C> pade(const PowerSeries<C>& series, std::size_t m, std::size_t k) {
    if (series.order() < m + k)
        throw ValidationError("series truncation order " + std::to_string(series.order()) +
                              " is below m + k = " + std::to_string(m + k));
    auto coeff = [&](long i) { return i < 0 ? C(BigRat(0)) : series[static_cast<std::size_t>(i)]; };

    std::vector<C> q(k + 1, C(BigRat(0)));
    std::size_t defect = 0;
    q[0] = C(BigRat(1));
    if (k > 0) {
        // sum_{j=0..k} c_{i-j} q_j = 0 for i = m+1 .. m+k, with q_0 fixed.
        Matrix<C> a(k, k);
        std::vector<C> rhs(k);
        for (std::size_t r = 0; r < k; ++r) {
            const long i = static_cast<long>(m + 1 + r);
            for (std::size_t j = 1; j <= k; ++j) a(r, j - 1) = coeff(i - static_cast<long>(j));
            rhs[r] = -coeff(i);
        }
        LinearSolution<C> sol;
        try {
            sol = solve_fraction_free(a, rhs);
        } catch (const MathError&) {
            // No approximant with den(0) != 0 at this cell of the Pade table;
            // step towards the corner of its block, where one exists.
            TransferFunction<C> reduced = m > 0 ? pade(series, m - 1, k - 1) : pade(series, m, k - 1);
            reduced.pade_defect += 1;
            return reduced;
        }
        defect = sol.defect;
        q[0] = sol.denominator;
        for (std::size_t j = 1; j <= k; ++j) q[j] = sol.numerators[j - 1];
    }
    std::vector<C> p(m + 1, C(BigRat(0)));
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= std::min(i, k); ++j) p[i] = p[i] + coeff(static_cast<long>(i - j)) * q[j];

    TransferFunction<C> tf{Poly<C>(std::move(p)), Poly<C>(std::move(q)), std::nullopt, defect, false};
    return normalize(std::move(tf));
}

/// Maps the realization order n to its Padé degree pair [n/n]; the 2n-th
/// convergent of the continued fraction is the order-n approximation.
std::pair<std::size_t, std::size_t> cfe_order_to_pade(std::size_t order);
/// Realization order reached by convergent index k (k / 2).
std::size_t convergent_to_order(std::size_t convergent_index);

/// g + h s
struct Affine {
    BigRat g;
    BigRat h;

    [[nodiscard]] RatPoly poly() const { return RatPoly::affine(g, h); }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// q0 + 1/(q1 + 1/(q2 + ...)); every partial numerator is 1.
struct ContinuedFraction {
    std::vector<Affine> quotients;

    [[nodiscard]] bool is_simple() const { return true; }
    /// Folds the nested fraction back into num/den.
    [[nodiscard]] RatTf reconstruct() const;
};

/// Euclidean expansion: divide, invert the remainder fraction, repeat.
/// Throws MathError("degenerate expansion") for a zero denominator or a
/// partial quotient of degree above one.
ContinuedFraction rational_to_cfe(const RatTf& tf);

}  // namespace fracreal
