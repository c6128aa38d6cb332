#include "fracreal/poly.hpp"

namespace fracreal {

RatDivision divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    std::vector<BigRat> rem = a.coeffs();
    const auto& d = b.coeffs();
    if (rem.size() < d.size()) return {RatPoly(), a};
    std::vector<BigRat> quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRat factor = rem[k + d.size() - 1] / d.back();
        quot[k] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= factor * d[i];
    }
    rem.resize(d.size() - 1);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd undefined");
    RatPoly x = a;
    RatPoly y = b;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return (BigRat(1) / x.leading()) * x;
}

RatPoly evaluate(const SymPoly& p, const Assignment& values) {
    return p.map([&](const ParamPoly& c) {
        const ParamPoly v = c.evaluate(values);
        if (!v.is_constant()) throw ValidationError("evaluation leaves unassigned symbols: " + v.to_string());
        return v.constant_term();
    });
}

SymPoly lift(const RatPoly& p) {
    return p.map([](const BigRat& c) { return ParamPoly(c); });
}

}  // namespace fracreal
