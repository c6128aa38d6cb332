#include "fracreal/approx.hpp"

#include <sstream>

namespace fracreal {

RatTf normalize(RatTf tf) {
    if (tf.den.is_zero()) throw MathError("transfer function with zero denominator");
    if (tf.num.is_zero()) {
        tf.den = RatPoly::constant(BigRat(1));
        return tf;
    }
    const RatPoly g = gcd(tf.num, tf.den);
    if (g.degree() > 0) {
        tf.num = divmod(tf.num, g).quotient;
        tf.den = divmod(tf.den, g).quotient;
    }
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto* p : {&tf.num, &tf.den}) {
        for (const auto& c : p->coeffs()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
        }
    }
    BigRat scale(mpq_class(den_lcm, num_gcd));
    if (tf.den.leading().sign() < 0) scale = -scale;
    tf.num = scale * tf.num;
    tf.den = scale * tf.den;
    return tf;
}

SymTf normalize_content(SymTf tf) {
    if (tf.den.is_zero()) throw MathError("transfer function with zero denominator");
    if (tf.num.is_zero()) {
        tf.den = SymPoly::constant(ParamPoly(1));
        return tf;
    }
    std::vector<ParamPoly> all = tf.num.coeffs();
    all.insert(all.end(), tf.den.coeffs().begin(), tf.den.coeffs().end());
    BigRat scale = BigRat(1) / collective_content(all);
    if (tf.den.leading().leading_term().second.sign() < 0) scale = -scale;
    tf.num = ParamPoly(scale) * tf.num;
    tf.den = ParamPoly(scale) * tf.den;
    return tf;
}

SymTf normalize(SymTf tf) {
    if (tf.den.is_zero()) throw MathError("transfer function with zero denominator");
    std::vector<ParamPoly> all = tf.num.coeffs();
    all.insert(all.end(), tf.den.coeffs().begin(), tf.den.coeffs().end());
    const ParamPoly g = gcd(all);
    if (!g.is_constant()) {
        auto divide = [&g](const ParamPoly& c) { return divide_exact(c, g); };
        tf.num = tf.num.map(divide);
        tf.den = tf.den.map(divide);
    }
    return normalize_content(std::move(tf));
}

RatTf evaluate(const SymTf& tf, const Assignment& values) {
    RatTf out;
    out.num = evaluate(tf.num, values);
    out.den = evaluate(tf.den, values);
    out.pade_defect = tf.pade_defect;
    out.beyond_validation = tf.beyond_validation;
    if (tf.gain) out.gain = GainTag{tf.gain->label, std::nullopt};
    if (out.den.is_zero()) throw MathError("denominator vanishes at the given parameter values");
    return normalize(std::move(out));
}

std::pair<std::size_t, std::size_t> cfe_order_to_pade(std::size_t order) { return {order, order}; }

std::size_t convergent_to_order(std::size_t convergent_index) { return convergent_index / 2; }

std::string Affine::to_string() const {
    if (h.is_zero()) return g.to_string();
    std::ostringstream os;
    os << h << "*s";
    if (!g.is_zero()) os << (g.sign() < 0 ? " - " : " + ") << abs(g);
    return os.str();
}

RatTf ContinuedFraction::reconstruct() const {
    if (quotients.empty()) throw ValidationError("empty continued fraction");
    RatPoly num = quotients.back().poly();
    RatPoly den = RatPoly::constant(BigRat(1));
    for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
        // q + den/num
        RatPoly next_num = it->poly() * num + den;
        den = std::move(num);
        num = std::move(next_num);
    }
    if (den.is_zero()) throw MathError("degenerate expansion");
    return normalize(RatTf{std::move(num), std::move(den), std::nullopt, 0, false});
}

ContinuedFraction rational_to_cfe(const RatTf& tf) {
    if (tf.den.is_zero()) throw MathError("degenerate expansion");
    ContinuedFraction out;
    RatPoly num = tf.num;
    RatPoly den = tf.den;
    while (true) {
        RatDivision d = divmod(num, den);
        if (d.quotient.degree() > 1) throw MathError("degenerate expansion: partial quotient of degree above one");
        out.quotients.push_back(Affine{d.quotient[0], d.quotient[1]});
        if (d.remainder.is_zero()) break;
        num = std::move(den);
        den = std::move(d.remainder);
    }
    return out;
}

}  // namespace fracreal
