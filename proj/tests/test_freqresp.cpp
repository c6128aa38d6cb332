#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracreal/freqresp.hpp"
#include "support.hpp"

using namespace fracreal;
using testing::dpoly;
using testing::ipoly;

namespace {

RatTf tf_of(RatPoly num, RatPoly den) { return RatTf{std::move(num), std::move(den), std::nullopt, 0, false}; }

const RatTf kHalfIntegrator3 = tf_of(dpoly({64, 112, 56, 7}), dpoly({64, 80, 24, 1}));

double wrap180(double deg) { return std::remainder(deg, 360.0); }

}  // namespace

TEST_CASE("log_grid") {
    const FrequencyGrid g = log_grid(1e-3, 1e3, FrequencyUnit::hz);
    REQUIRE(g.values.size() == 301);
    CHECK(g.values.front() == 1e-3);
    CHECK(g.values.back() == 1e3);
    for (std::size_t i = 1; i < g.values.size(); ++i) CHECK(g.values[i] > g.values[i - 1]);
    CHECK(g.values[50] == doctest::Approx(1e-2).epsilon(1e-12));

    // 1.30103 decades at 10 per decade: 14 steps.
    const FrequencyGrid odd = log_grid(1, 20, FrequencyUnit::rad, 10);
    CHECK(odd.values.size() == 15);
    CHECK(odd.values.back() == 20);
    CHECK(odd.unit == FrequencyUnit::rad);

    CHECK_THROWS_AS(log_grid(5, 5, FrequencyUnit::hz), ValidationError);
    CHECK_THROWS_AS(log_grid(0, 1, FrequencyUnit::hz), ValidationError);
    CHECK_THROWS_AS(log_grid(10, 1, FrequencyUnit::hz), ValidationError);
    CHECK_THROWS_AS(log_grid(1, 10, FrequencyUnit::hz, 0), ValidationError);
}

TEST_CASE("unit conversion") {
    CHECK(to_rad_per_s(1, FrequencyUnit::rad) == 1);
    CHECK(to_rad_per_s(1, FrequencyUnit::hz) == doctest::Approx(2 * M_PI));
    CHECK(to_string(FrequencyUnit::hz) == "hz");
    CHECK(to_string(FrequencyUnit::rad) == "rad");
}

TEST_CASE("bode examples") {
    SUBCASE("pure integrator at 1 rad/s") {
        const BodeSweep b = bode(tf_of(ipoly({1}), ipoly({0, 1})), FrequencyGrid{{1.0}, FrequencyUnit::rad});
        CHECK(b.mag_db[0] == doctest::Approx(0).epsilon(1e-12));
        CHECK(b.phase_deg[0] == doctest::Approx(-90).epsilon(1e-12));
        CHECK(b.finite[0]);
    }
    SUBCASE("order-3 half integrator tends to unity at high frequency") {
        const BodeSweep b = bode(kHalfIntegrator3, FrequencyGrid{{1e6}, FrequencyUnit::hz});
        CHECK(std::abs(b.mag_db[0]) < 1e-4);
        CHECK(std::abs(b.phase_deg[0]) < 1e-3);
    }
    SUBCASE("order-3 half integrator sits near -45 degrees inside its band") {
        const BodeSweep b = bode(kHalfIntegrator3, FrequencyGrid{{0.02}, FrequencyUnit::hz});
        CHECK(std::abs(b.phase_deg[0] + 45) < 3);
    }
    SUBCASE("constant") {
        const BodeSweep b = bode(tf_of(ipoly({1}), ipoly({1})), log_grid(1e-3, 1e3, FrequencyUnit::hz, 5));
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b.mag_db[i] == 0);
            CHECK(b.phase_deg[i] == 0);
        }
    }
    SUBCASE("gain tag multiplies the response") {
        RatTf tf = tf_of(ipoly({1}), ipoly({1}));
        tf.gain = GainTag{"Kc*x^alpha", 10.0};
        CHECK(bode(tf, FrequencyGrid{{1.0}, FrequencyUnit::hz}).mag_db[0] == doctest::Approx(20));
    }
}

TEST_CASE("Horner evaluation agrees with naive evaluation") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> w(-3, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<BigRat> n(1 + t % 6), d(1 + (t / 6) % 6);
        for (auto& c : n) c = testing::random_rat(rng, -5, 5, 7);
        for (auto& c : d) c = testing::random_nonzero_rat(rng, -5, 5, 7);
        const RatPoly num(n), den(d);
        const std::complex<double> s{w(rng), w(rng)};
        const std::complex<double> want = testing::naive_eval(num, s) / testing::naive_eval(den, s);
        const std::complex<double> got = evaluate(tf_of(num, den), s);
        CHECK(std::abs(got - want) <= 1e-9 * (1 + std::abs(want)));
    }
}

TEST_CASE("pole on the grid is flagged") {
    const RatTf resonant = tf_of(ipoly({1}), ipoly({1, 0, 1}));
    const BodeSweep b = bode(resonant, FrequencyGrid{{0.5, 1.0, 2.0}, FrequencyUnit::rad});
    CHECK(b.finite[0]);
    CHECK(!b.finite[1]);
    CHECK(b.finite[2]);
    CHECK(b.mag_db[0] == doctest::Approx(20 * std::log10(1 / 0.75)));
}

TEST_CASE("response properties") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> w(-2, 2);
    for (int t = 0; t < 100; ++t) {
        std::vector<BigRat> a(3), b(3), c(2), d(2);
        for (auto* v : {&a, &b, &c, &d})
            for (auto& x : *v) x = testing::random_nonzero_rat(rng, -4, 4, 5);
        const RatTf f = tf_of(RatPoly(a), RatPoly(b));
        const RatTf g = tf_of(RatPoly(c), RatPoly(d));
        const std::complex<double> s{w(rng), w(rng)};
        const auto fs = evaluate(f, s);
        // Real coefficients: H(conj s) = conj H(s).
        CHECK(std::abs(evaluate(f, std::conj(s)) - std::conj(fs)) <= 1e-9 * (1 + std::abs(fs)));
        // |FG| in dB adds, arg(FG) adds modulo 360.
        const RatTf fg = tf_of(f.num * g.num, f.den * g.den);
        const FrequencyGrid grid{{std::abs(w(rng)) + 0.1}, FrequencyUnit::rad};
        const BodeSweep bf = bode(f, grid), bg = bode(g, grid), bfg = bode(fg, grid);
        CHECK(bfg.mag_db[0] == doctest::Approx(bf.mag_db[0] + bg.mag_db[0]).epsilon(1e-9).scale(1));
        CHECK(std::abs(wrap180(bfg.phase_deg[0] - bf.phase_deg[0] - bg.phase_deg[0])) < 1e-7);
    }
}

TEST_CASE("phase unwrapping") {
    // (1/(s+1))^4 crosses -180 degrees; the unwrapped phase is continuous.
    const RatTf tf = tf_of(ipoly({1}), ipoly({1, 4, 6, 4, 1}));
    const BodeSweep b = bode(tf, log_grid(1e-2, 1e3, FrequencyUnit::rad, 20));
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(std::abs(b.phase_deg[i] - b.phase_deg[i - 1]) < 30);
    CHECK(b.phase_deg.back() == doctest::Approx(-360).epsilon(1e-3));
}

TEST_CASE("ideal responses") {
    const FrequencyGrid grid = log_grid(1e-2, 1e2, FrequencyUnit::rad, 10);
    SUBCASE("half integrator") {
        const BodeSweep b = ideal_response(Differintegrator{BigRat(1, 2)}, grid);
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b.phase_deg[i] == doctest::Approx(-45));
            CHECK(b.mag_db[i] == doctest::Approx(-10 * std::log10(grid.values[i])).scale(1));
        }
    }
    SUBCASE("high-range differentiator uses omega T") {
        const BodeSweep b = ideal_response(
            Differintegrator{BigRat(1, 2), Action::differentiator, Range::high, BigRat(10)}, grid);
        CHECK(b.phase_deg[0] == doctest::Approx(45));
        CHECK(b.mag_db[0] == doctest::Approx(10 * std::log10(1e-2 * 10)).scale(1));
    }
    SUBCASE("FO[PD] at low frequency") {
        const BodeSweep b = ideal_response(FopdBracket{BigRat(4), BigRat(1), BigRat(1, 2)},
                                           FrequencyGrid{{1e-9}, FrequencyUnit::rad});
        CHECK(b.mag_db[0] == doctest::Approx(20 * 0.5 * std::log10(4.0)));
        CHECK(std::abs(b.phase_deg[0]) < 1e-6);
    }
    SUBCASE("lead-lag at low frequency") {
        const BodeSweep b = ideal_response(LeadLag{BigRat(20), BigRat(1), BigRat(1, 4), BigRat(1, 2)},
                                           FrequencyGrid{{1e-9}, FrequencyUnit::rad});
        CHECK(b.mag_db[0] == doctest::Approx(20));
    }
    SUBCASE("FOPID matches direct complex evaluation") {
        const Fopid c{BigRat(2), BigRat(3), BigRat(1, 2), BigRat(1, 2), BigRat(3, 4)};
        const BodeSweep b = ideal_response(c, grid);
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::complex<double> jw{0, grid.values[i]};
            const auto h = 2.0 + 3.0 * std::pow(jw, -0.5) + 0.5 * std::pow(jw, 0.75);
            CHECK(b.mag_db[i] == doctest::Approx(20 * std::log10(std::abs(h))));
            CHECK(std::abs(wrap180(b.phase_deg[i] - std::arg(h) * 180 / M_PI)) < 1e-9);
        }
    }
}

TEST_CASE("fit_report") {
    const FrequencyGrid grid = log_grid(1e-3, 1e1, FrequencyUnit::hz);
    const BodeSweep ideal = ideal_response(Differintegrator{BigRat(1, 2)}, grid);

    const FitReport same = fit_report(ideal, ideal, Band{1e-2, 1});
    CHECK(same.max_phase_error_deg == 0);
    CHECK(same.max_mag_error_db == 0);
    CHECK(same.points == 101);
    REQUIRE(same.constant_phase);
    CHECK(*same.constant_phase == Band{1e-3, 1e1});

    const BodeSweep unit_ideal = ideal_response(Differintegrator{BigRat(1)}, grid);
    const BodeSweep unit_tf = bode(tf_of(ipoly({1}), ipoly({0, 1})), grid);
    const FitReport exact = fit_report(unit_tf, unit_ideal, Band{1e-3, 1e1});
    CHECK(exact.max_phase_error_deg < 1e-9);
    CHECK(exact.max_mag_error_db < 1e-9);

    const FitReport approx = fit_report(bode(kHalfIntegrator3, grid), ideal, Band{3e-3, 1});
    CHECK(std::isfinite(approx.max_phase_error_deg));
    CHECK(approx.mean_phase_error_deg <= approx.max_phase_error_deg);
    CHECK(approx.mean_mag_error_db <= approx.max_mag_error_db);

    CHECK_THROWS_WITH_AS(fit_report(ideal, ideal, Band{1e-4, 1}), "fit band must lie within the evaluated grid",
                         ValidationError);
    const BodeSweep other = ideal_response(Differintegrator{BigRat(1, 2)}, log_grid(1e-3, 1e1, FrequencyUnit::hz, 10));
    CHECK_THROWS_AS(fit_report(other, ideal, Band{1e-2, 1}), ValidationError);
}

TEST_CASE("constant_phase_band") {
    const FrequencyGrid grid = log_grid(1e-2, 1e2, FrequencyUnit::hz, 10);
    const BodeSweep ideal = ideal_response(Differintegrator{BigRat(1, 2)}, grid);
    CHECK(constant_phase_band(ideal, -45, 1) == Band{1e-2, 1e2});
    CHECK(!constant_phase_band(ideal, 45, 1));
    CHECK_THROWS_AS(constant_phase_band(ideal, -45, 0), ValidationError);

    // One integrator pole at 1 rad/s: phase within 5 degrees of -45 only near the corner.
    const BodeSweep lag = bode(tf_of(ipoly({1}), ipoly({1, 1})), log_grid(1e-2, 1e2, FrequencyUnit::rad, 100));
    const auto band = constant_phase_band(lag, -45, 5);
    REQUIRE(band);
    CHECK(band->lo == doctest::Approx(std::tan(40 * M_PI / 180)).epsilon(0.03));
    CHECK(band->hi == doctest::Approx(std::tan(50 * M_PI / 180)).epsilon(0.03));
}
