#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace fracreal;
using testing::P;

namespace {

using SymSeries = PowerSeries<ParamPoly>;

SymSeries sym_series(std::initializer_list<const char*> c) {
    std::vector<ParamPoly> v;
    for (const char* s : c) v.push_back(P(s));
    return SymSeries(std::move(v));
}

PowerSeries<BigRat> rat_series(std::initializer_list<long> c) {
    std::vector<BigRat> v(c.begin(), c.end());
    return PowerSeries<BigRat>(std::move(v));
}

// prod_{i<k} (e - i) / k!, straight from the definition.
ParamPoly binomial_coefficient(const ParamPoly& e, std::size_t k) {
    ParamPoly num(1);
    BigRat fact(1);
    for (std::size_t i = 0; i < k; ++i) {
        num = num * (e - ParamPoly(static_cast<long>(i)));
        fact *= BigRat(static_cast<long>(i + 1));
    }
    return num * ParamPoly(BigRat(1) / fact);
}

// (1 + w)^alpha (1 + x w)^-alpha as a Cauchy product of two binomial series.
std::vector<ParamPoly> kernel_oracle(const ParamPoly& alpha, const ParamPoly& x, std::size_t n) {
    std::vector<ParamPoly> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j)
            out[i + j] += binomial_coefficient(alpha, i) * binomial_coefficient(-alpha, j) * pow(x, j);
    return out;
}

}  // namespace

TEST_CASE("binomial_series") {
    CHECK(binomial_series(P("lambda"), 2) == sym_series({"1", "lambda", "(1/2)*lambda^2 - (1/2)*lambda"}));
    const auto half = binomial_series(BigRat(1, 2), 3);
    CHECK(half.coeffs() == std::vector<BigRat>{1, BigRat(1, 2), BigRat(-1, 8), BigRat(1, 16)});
    CHECK(binomial_series(BigRat(1), 4).coeffs() == std::vector<BigRat>{1, 1, 0, 0, 0});
    CHECK(binomial_series(BigRat(1), 4).order() == 4);
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(binomial_series(P("mu"), 6)[k] == binomial_coefficient(P("mu"), k));
}

TEST_CASE("binomial addition law") {
    const auto a = binomial_series(P("lambda"), 5);
    const auto b = binomial_series(P("mu"), 5);
    CHECK(series_mul(a, b) == binomial_series(P("lambda + mu"), 5));
}

TEST_CASE("leadlag_kernel_series") {
    const auto k = leadlag_kernel_series(P("alpha"), P("x"), 4);
    CHECK(k[0] == P("1"));
    CHECK(k[1] == P("alpha*(1 - x)"));
    CHECK(k.coeffs() == kernel_oracle(P("alpha"), P("x"), 4));
    for (std::size_t i = 0; i <= 4; ++i) CHECK(k[i].total_degree() <= 2 * i);

    const auto collapsed = leadlag_kernel_series(BigRat(7, 3), BigRat(1), 5);
    CHECK(collapsed.coeffs() == std::vector<BigRat>{1, 0, 0, 0, 0, 0});

    const auto unit_alpha = leadlag_kernel_series(P("1"), P("x"), 4);
    CHECK(unit_alpha[2] == P("-x*(1 - x)"));
    // Direct series of (1 + w)/(1 + x w): 1 + (1 - x) sum (-x)^(k-1) w^k.
    for (std::size_t i = 1; i <= 4; ++i) CHECK(unit_alpha[i] == P("1 - x") * pow(P("-x"), i - 1));

    // Substituting alpha = 1 into the symbolic kernel gives the same series.
    for (std::size_t i = 0; i <= 4; ++i) CHECK(k[i].substitute(Symbol::alpha, P("1")) == unit_alpha[i]);
}

TEST_CASE("series_combine") {
    CHECK(series_combine(rat_series({1, 1, 1, 1}), rat_series({0, 0, 0, 0}), SeriesOp::reciprocal) ==
          rat_series({1, -1, 0, 0}));
    CHECK(series_combine(sym_series({"1", "lambda", "0"}), sym_series({"1", "mu", "0"}), SeriesOp::mul) ==
          sym_series({"1", "lambda + mu", "lambda*mu"}));
    CHECK(series_combine(rat_series({1, 2}), rat_series({3, 4}), SeriesOp::add) == rat_series({4, 6}));

    const std::size_t n = 7;
    const auto id = series_combine(exp_series<BigRat>(n), log1p_series<BigRat>(n), SeriesOp::compose);
    std::vector<BigRat> expect(n + 1, BigRat(0));
    expect[0] = expect[1] = 1;
    CHECK(id.coeffs() == expect);

    CHECK_THROWS_WITH_AS(series_reciprocal(rat_series({0, 1, 1})), "no inverse", MathError);
    CHECK_THROWS_AS(series_reciprocal(sym_series({"lambda", "1"})), MathError);
    CHECK_THROWS_WITH_AS(series_compose(rat_series({1, 1}), rat_series({1, 1})), "composition undefined", MathError);
    CHECK_THROWS_AS(series_add(rat_series({1, 1}), rat_series({1})), ValidationError);
}

TEST_CASE("log after exp is the identity") {
    const std::size_t n = 6;
    // log(1 + u) with u = exp(t) - 1.
    auto u = exp_series<BigRat>(n);
    u[0] = 0;
    const auto t = series_compose(log1p_series<BigRat>(n), u);
    std::vector<BigRat> expect(n + 1, BigRat(0));
    expect[1] = 1;
    CHECK(t.coeffs() == expect);
}

TEST_CASE("reciprocal on symbolic series") {
    const auto a = binomial_series(P("lambda"), 5);
    const auto r = series_reciprocal(a);
    CHECK(r == binomial_series(P("-lambda"), 5));
    const auto one = series_mul(a, r);
    CHECK(one[0] == P("1"));
    for (std::size_t k = 1; k <= 5; ++k) CHECK(one[k].is_zero());
}
