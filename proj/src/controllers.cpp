#include "fracreal/controllers.hpp"

#include <cmath>

namespace fracreal {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

bool open_unit_to_two(const BigRat& v) { return v > BigRat(0) && v < BigRat(2); }

ParamPoly sym(Symbol s) { return ParamPoly::var(s); }

}  // namespace

void validate(const ControllerSpec& spec) {
    std::visit(
        [](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Differintegrator>) {
                require(s.order > BigRat(0) && s.order <= BigRat(1), "differintegrator order must lie in (0, 1]");
                require(s.T > BigRat(0), "time constant T must be positive");
            } else if constexpr (std::is_same_v<S, Fopid>) {
                require(s.kp >= BigRat(0) && s.ki >= BigRat(0) && s.kd >= BigRat(0),
                        "FOPID gains Kp, Ki, Kd must be non-negative");
                require(open_unit_to_two(s.lambda), "FOPID lambda must lie in (0, 2)");
                require(open_unit_to_two(s.mu), "FOPID mu must lie in (0, 2)");
            } else if constexpr (std::is_same_v<S, FopdBracket>) {
                require(s.kp >= BigRat(0), "FO[PD] Kp must be non-negative");
                require(s.kd > BigRat(0), "FO[PD] Kd must be positive");
                require(open_unit_to_two(s.mu), "FO[PD] mu must lie in (0, 2)");
            } else {
                require(s.kc > BigRat(0), "lead-lag Kc must be positive");
                require(s.lambda > BigRat(0), "lead-lag lambda must be positive");
                require(s.x > BigRat(0) && s.x <= BigRat(1), "lead-lag x must lie in (0, 1)");
                require(s.alpha >= BigRat(0) && s.alpha <= BigRat(1), "lead-lag alpha must lie in (0, 1]");
            }
        },
        spec);
}

RatTf realize_differintegrator(const Differintegrator& spec, std::size_t n) {
    validate(spec);
    return differintegrator_tf(spec.order, spec.action, spec.range, spec.T, n);
}

RatTf realize_fopid(const Fopid& spec, Range range, std::size_t n) {
    validate(spec);
    return fopid_tf(spec.kp, spec.ki, spec.kd, spec.lambda, spec.mu, range, n);
}

RatTf realize_fopd_bracket(const FopdBracket& spec, std::size_t n) {
    validate(spec);
    const long whole = spec.mu.floor();
    const BigRat frac = spec.mu - BigRat(whole);
    RatTf tf = fopd_bracket_tf(spec.kp, spec.kd, frac, static_cast<unsigned>(whole), n);
    if (!frac.is_zero())
        tf.gain = GainTag{"Kp^" + frac.to_string(), std::pow(spec.kp.to_double(), frac.to_double())};
    return tf;
}

RatTf realize_leadlag(const LeadLag& spec, std::size_t n) {
    validate(spec);
    RatTf tf = leadlag_tf(spec.lambda, spec.x, spec.alpha, n);
    tf.gain = GainTag{"Kc*x^alpha", spec.kc.to_double() * std::pow(spec.x.to_double(), spec.alpha.to_double())};
    return tf;
}

RatTf realize(const ControllerSpec& spec, Range range, std::size_t n) {
    return std::visit(
        [&](const auto& s) -> RatTf {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Differintegrator>)
                return realize_differintegrator(s, n);
            else if constexpr (std::is_same_v<S, Fopid>)
                return realize_fopid(s, range, n);
            else if constexpr (std::is_same_v<S, FopdBracket>)
                return realize_fopd_bracket(s, n);
            else
                return realize_leadlag(s, n);
        },
        spec);
}

SymTf symbolic_differintegrator(Range range, std::size_t n, Action action) {
    return differintegrator_tf(sym(Symbol::lambda), action, range, ParamPoly(1), n);
}

SymTf symbolic_fopid(Range range, std::size_t n) {
    return fopid_tf(sym(Symbol::Kp), sym(Symbol::Ki), sym(Symbol::Kd), sym(Symbol::lambda), sym(Symbol::mu), range,
                    n);
}

SymTf symbolic_fopd_bracket(std::size_t n) {
    SymTf tf = fopd_bracket_tf(sym(Symbol::Kp), sym(Symbol::Kd), sym(Symbol::mu), 0, n);
    tf.gain = GainTag{"Kp^mu", std::nullopt};
    return tf;
}

SymTf symbolic_leadlag(std::size_t n) {
    SymTf tf = leadlag_tf(sym(Symbol::lambda), sym(Symbol::x), sym(Symbol::alpha), n);
    tf.gain = GainTag{"Kc*x^alpha", std::nullopt};
    return tf;
}

Assignment assignment_of(const ControllerSpec& spec) {
    return std::visit(
        [](const auto& s) -> Assignment {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Differintegrator>)
                return {{Symbol::lambda, s.order}, {Symbol::T, s.T}};
            else if constexpr (std::is_same_v<S, Fopid>)
                return {{Symbol::Kp, s.kp}, {Symbol::Ki, s.ki}, {Symbol::Kd, s.kd},
                        {Symbol::lambda, s.lambda}, {Symbol::mu, s.mu}};
            else if constexpr (std::is_same_v<S, FopdBracket>)
                return {{Symbol::Kp, s.kp}, {Symbol::Kd, s.kd}, {Symbol::mu, s.mu}};
            else
                return {{Symbol::Kc, s.kc}, {Symbol::lambda, s.lambda}, {Symbol::x, s.x}, {Symbol::alpha, s.alpha}};
        },
        spec);
}

std::string to_string(Range r) { return r == Range::low ? "low" : "high"; }
std::string to_string(Action a) { return a == Action::integrator ? "integrator" : "differentiator"; }

}  // namespace fracreal
