#include "fracreal/baselines.hpp"

#include <cmath>
#include <complex>

#include "fracreal/freqresp.hpp"

namespace fracreal {

namespace {

BigRat exact(double v) { return BigRat::from_double(v); }

RatPoly monomial(std::size_t power) {
    std::vector<BigRat> c(power + 1, BigRat(0));
    c[power] = BigRat(1);
    return RatPoly(std::move(c));
}

struct ZeroPole {
    RatPoly num;
    RatPoly den;
};

ZeroPole recursive_core(const BaselineConfig& cfg) {
    const double ratio = cfg.wh / cfg.wb;
    const auto n = static_cast<double>(cfg.n);
    const double span = 2.0 * n + 1.0;
    ZeroPole out{RatPoly::constant(BigRat(1)), RatPoly::constant(BigRat(1))};
    for (long k = -static_cast<long>(cfg.n); k <= static_cast<long>(cfg.n); ++k) {
        const double kk = static_cast<double>(k);
        const double zero = cfg.wb * std::pow(ratio, (kk + n + (1.0 - cfg.lambda) / 2.0) / span);
        const double pole = cfg.wb * std::pow(ratio, (kk + n + (1.0 + cfg.lambda) / 2.0) / span);
        out.num = out.num * RatPoly::affine(exact(zero), BigRat(1));
        out.den = out.den * RatPoly::affine(exact(pole), BigRat(1));
    }
    return out;
}

RatTf finish(RatPoly num, RatPoly den, bool integrator) {
    if (integrator) std::swap(num, den);
    return normalize(RatTf{std::move(num), std::move(den), std::nullopt, 0, false});
}

}  // namespace

void validate(const BaselineConfig& cfg) {
    if (!(cfg.lambda > 0 && cfg.lambda < 1)) throw ValidationError("baseline lambda must lie in (0, 1)");
    if (!(cfg.wb > 0 && cfg.wb < cfg.wh)) throw ValidationError("baseline band requires 0 < wb < wh");
    if (cfg.n < 1) throw ValidationError("recursion depth N must be at least 1");
    if (!(cfg.b > 0 && cfg.d > 0)) throw ValidationError("shaping constants b and d must be positive");
}

RatTf oustaloup(const BaselineConfig& cfg) {
    validate(cfg);
    ZeroPole core = recursive_core(cfg);
    const double wu = std::sqrt(cfg.wb * cfg.wh);
    RatTf unit{core.num, core.den, std::nullopt, 0, false};
    const double k = std::pow(wu, cfg.lambda) / std::abs(evaluate(unit, {0.0, wu}));
    return finish(exact(k) * core.num, std::move(core.den), cfg.integrator);
}

RatTf modified_oustaloup(const BaselineConfig& cfg) {
    validate(cfg);
    ZeroPole core = recursive_core(cfg);
    const BigRat d = exact(cfg.d);
    const BigRat bwh = exact(cfg.b * cfg.wh);
    const BigRat lam = exact(cfg.lambda);
    const RatPoly bq_num(std::vector<BigRat>{BigRat(0), bwh, d});
    const RatPoly bq_den(std::vector<BigRat>{d * lam, bwh, d * (BigRat(1) - lam)});
    const BigRat k = exact(std::pow(cfg.d * cfg.wh / cfg.b, cfg.lambda));
    return finish(k * (bq_num * core.num), bq_den * core.den, cfg.integrator);
}

RatTf carlson(const BigRat& lambda, std::size_t iterations, bool integrator) {
    if (!(lambda > BigRat(0))) throw ValidationError("Carlson order must be positive");
    if (iterations < 1) throw ValidationError("Carlson iteration count must be at least 1");
    const mpz_class& mz = lambda.numerator();
    const mpz_class& qz = lambda.denominator();
    if (qz > 4 || !mz.fits_ulong_p()) throw ValidationError("Carlson requires rational order");
    const std::size_t m = mz.get_ui();
    const std::size_t q = qz.get_ui();
    if (q == 1) return finish(monomial(m), RatPoly::constant(BigRat(1)), integrator);

    const RatPoly sm = monomial(m);
    const BigRat qm1(static_cast<long>(q) - 1);
    const BigRat qp1(static_cast<long>(q) + 1);
    RatPoly num = RatPoly::constant(BigRat(1));
    RatPoly den = RatPoly::constant(BigRat(1));
    for (std::size_t i = 0; i < iterations; ++i) {
        const RatPoly nq = pow(num, static_cast<unsigned>(q));
        const RatPoly dq_sm = pow(den, static_cast<unsigned>(q)) * sm;
        RatPoly next_num = num * (qm1 * nq + qp1 * dq_sm);
        RatPoly next_den = den * (qp1 * nq + qm1 * dq_sm);
        RatTf reduced = normalize(RatTf{std::move(next_num), std::move(next_den), std::nullopt, 0, false});
        num = std::move(reduced.num);
        den = std::move(reduced.den);
    }
    return finish(std::move(num), std::move(den), integrator);
}

}  // namespace fracreal
