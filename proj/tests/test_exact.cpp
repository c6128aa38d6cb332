#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracreal/linsolve.hpp"
#include "support.hpp"

using namespace fracreal;
using testing::P;
using testing::q;

TEST_CASE("BigRat parses exactly and stays canonical") {
    CHECK(q("0.6404") == BigRat(1601, 2500));
    CHECK(q("-1.5e-3") == BigRat(-3, 2000));
    CHECK(q("6/4") == BigRat(3, 2));
    CHECK(q("6/4").to_string() == "3/2");
    CHECK(q("-0/7").to_string() == "0");
    CHECK(BigRat(4, -8).to_string() == "-1/2");
    CHECK(q("2.5e1") == BigRat(25));
    CHECK_THROWS_AS(q("1/0"), ValidationError);
    CHECK_THROWS_AS(q("abc"), ValidationError);
    CHECK_THROWS_AS(BigRat(1) / BigRat(0), MathError);
    CHECK(BigRat::from_double(0.1).to_double() == 0.1);
    CHECK(q("7/2").floor() == 3);
    CHECK(q("-7/2").floor() == -4);
}

TEST_CASE("ParamPoly parse and print round trip") {
    const ParamPoly p = P("-20*lambda^3 + 180*lambda^2 - (1/2)*Kp*Kd + 3");
    CHECK(P(p.to_string().c_str()) == p);
    CHECK(P("(lambda - 2)*(lambda - 3)*(lambda - 4)") == P("lambda^3 - 9*lambda^2 + 26*lambda - 24"));
    CHECK(P("0.5*x") == P("(1/2)*x"));
    CHECK(P("x - x").is_zero());
    CHECK_THROWS_AS(P("lambda +"), ValidationError);
    CHECK_THROWS_AS(P("y"), ValidationError);
    CHECK(P("2*mu^2*Kd + mu").degree_in(Symbol::mu) == 2);
    CHECK(P("3*lambda^2").evaluate({{Symbol::lambda, BigRat(1, 2)}}) == P("3/4"));
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(P("lambda^2 - 1"), P("lambda - 1")) == P("lambda - 1"));
    // Both prefactors of the fourth-order low-range form expand to (l-2)(l-3)(l-4).
    const ParamPoly a = P("lambda^3 - 9*lambda^2 + 26*lambda - 24");
    const ParamPoly b = P("(lambda - 4)*(lambda^2 - 5*lambda + 6)");
    CHECK(a == b);
    CHECK(poly_gcd(a, b) == a);
    CHECK(poly_gcd(P("2*lambda^2 + 4"), ParamPoly()) == P("lambda^2 + 2"));
    CHECK_THROWS_WITH_AS(poly_gcd(ParamPoly(), ParamPoly()), "gcd undefined", MathError);
    CHECK_THROWS_AS(poly_gcd(P("lambda + mu"), P("lambda")), ValidationError);
    CHECK_THROWS_AS(poly_gcd(P("lambda"), P("mu")), ValidationError);
}

TEST_CASE("poly_gcd divides both inputs exactly") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto rnd = [&](int deg) {
            ParamPoly p;
            for (int k = 0; k <= deg; ++k) p += ParamPoly(testing::random_rat(rng, -4, 4, 3)) * ParamPoly::var(Symbol::lambda, k);
            return p;
        };
        const ParamPoly common = rnd(1) + ParamPoly::var(Symbol::lambda, 2);
        const ParamPoly a = common * rnd(2);
        const ParamPoly b = common * rnd(2);
        if (a.is_zero() || b.is_zero()) continue;
        const ParamPoly g = poly_gcd(a, b);
        CHECK(divide_exact(a, g) * g == a);
        CHECK(divide_exact(b, g) * g == b);
        CHECK(divide_exact(g, poly_gcd(common, common)) * poly_gcd(common, common) == g);
    }
}

TEST_CASE("multivariate gcd") {
    const ParamPoly f = P("Kp + Kd");
    CHECK(gcd(f * P("lambda + 1"), f * P("lambda - 1")) == f);
    CHECK(gcd(P("2*x*alpha + 2*x"), P("4*x^2")) == P("x"));
    CHECK(gcd(P("mu^2 - Kd^2"), P("mu*Kp + Kd*Kp")) == P("mu + Kd"));
    CHECK(gcd(P("lambda + 1"), P("lambda + 2")).is_constant());
    CHECK_THROWS_AS(divide_exact(P("lambda + 1"), P("lambda + 2")), MathError);
}

TEST_CASE("poly_normalize") {
    auto [c1, p1] = poly_normalize(P("4*lambda^2 - 4"));
    CHECK(c1 == BigRat(4));
    CHECK(p1 == P("lambda^2 - 1"));
    auto [c2, p2] = poly_normalize(P("(1/2)*x + 1/4"));
    CHECK(c2 == BigRat(1, 4));
    CHECK(p2 == P("2*x + 1"));
    auto [c3, p3] = poly_normalize(P("-3*lambda"));
    CHECK(c3 == BigRat(-3));
    CHECK(p3 == P("lambda"));
    auto [c4, p4] = poly_normalize(ParamPoly());
    CHECK(c4.is_zero());
    CHECK(p4.is_zero());
    // Idempotent.
    for (const char* s : {"6*mu^2*Kd - 9*Kp + 3/7", "-(2/3)*x*alpha^2 + 4", "5"}) {
        const auto n = poly_normalize(P(s));
        CHECK(n.content * n.primitive == P(s));
        const auto again = poly_normalize(n.primitive);
        CHECK(again.content == BigRat(1));
        CHECK(again.primitive == n.primitive);
    }
}

TEST_CASE("ParamFraction reduces and compares by cross-multiplication") {
    const ParamFraction f(P("lambda^2 - 1"), P("2*lambda - 2"));
    const ParamFraction r = f.reduced();
    CHECK(r.num() * P("2") == P("lambda + 1") * r.den());
    CHECK(f == ParamFraction(P("lambda + 1"), P("2")));
    CHECK(f + ParamFraction(P("1")) == ParamFraction(P("lambda + 3"), P("2")));
    CHECK_THROWS_AS(ParamFraction(P("1"), ParamPoly()), MathError);
}

namespace {

// Term-by-term product over the raw term maps.
ParamPoly brute_mul(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m;
            for (std::size_t i = 0; i < kSymbolCount; ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            out += ParamPoly::term(m, ca * cb);
        }
    return out;
}

ParamPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> sym(0, 3);
    std::uniform_int_distribution<int> e(0, 2);
    ParamPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        m.exps[sym(rng)] = static_cast<std::uint8_t>(e(rng));
        m.exps[sym(rng) + 4] = static_cast<std::uint8_t>(e(rng));
        p += ParamPoly::term(m, testing::random_rat(rng, -5, 5, 4));
    }
    return p;
}

}  // namespace

TEST_CASE("ParamPoly ring axioms on random instances") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        const ParamPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == brute_mul(a, b));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == ParamPoly());
        if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("solve_fraction_free") {
    SUBCASE("identity") {
        Matrix<BigRat> a(2, 2);
        a(0, 0) = 1;
        a(1, 1) = 1;
        const auto s = solve_fraction_free(a, std::vector<BigRat>{1, 2});
        CHECK(s.defect == 0);
        CHECK(s.numerators[0] / s.denominator == BigRat(1));
        CHECK(s.numerators[1] / s.denominator == BigRat(2));
    }
    SUBCASE("[1/1] system for (1+x)^lambda gives b1 = (1 - lambda)/2") {
        // c2 + c1 b1 = 0 with c1 = lambda, c2 = lambda(lambda - 1)/2.
        Matrix<ParamPoly> a(1, 1);
        a(0, 0) = P("lambda");
        const auto s = solve_fraction_free(a, std::vector<ParamPoly>{P("-(1/2)*lambda*(lambda - 1)")});
        const auto x = to_fractions(s);
        CHECK(x[0] == ParamFraction(P("1 - lambda"), P("2")));
    }
    SUBCASE("constant series gives a rank defect") {
        Matrix<BigRat> a(1, 1);
        const auto s = solve_fraction_free(a, std::vector<BigRat>{0});
        CHECK(s.defect == 1);
    }
    SUBCASE("inconsistent system") {
        Matrix<BigRat> a(2, 2);
        a(0, 0) = 1;
        a(0, 1) = 2;
        a(1, 0) = 2;
        a(1, 1) = 4;
        CHECK_THROWS_WITH_AS(solve_fraction_free(a, std::vector<BigRat>{1, 3}), "no solution", MathError);
    }
}

TEST_CASE("solve_fraction_free leaves a zero residual") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + t % 4;
        Matrix<ParamPoly> a(n, n);
        std::vector<ParamPoly> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] = ParamPoly(testing::random_rat(rng, -3, 3, 2)) + ParamPoly::var(Symbol::mu, i % 2);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = ParamPoly(testing::random_rat(rng, -3, 3, 2)) * ParamPoly::var(Symbol::lambda, (i + j) % 2);
        }
        LinearSolution<ParamPoly> s;
        try {
            s = solve_fraction_free(a, b);
        } catch (const MathError&) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            ParamPoly lhs;
            for (std::size_t j = 0; j < n; ++j) lhs += a(i, j) * s.numerators[j];
            CHECK(lhs == b[i] * s.denominator);
        }
    }
}
