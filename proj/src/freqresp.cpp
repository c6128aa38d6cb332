#include "fracreal/freqresp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fracreal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

std::complex<double> horner(const RatPoly& p, std::complex<double> s, double& scale) {
    std::complex<double> acc = 0.0;
    scale = 0.0;
    const double r = std::abs(s);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const double c = p.coeffs()[i].to_double();
        acc = acc * s + c;
        scale = scale * r + std::abs(c);
    }
    return acc;
}

BodeSweep empty_sweep(const FrequencyGrid& grid) {
    BodeSweep out;
    out.freqs = grid.values;
    out.unit = grid.unit;
    out.mag_db.reserve(grid.values.size());
    out.phase_deg.reserve(grid.values.size());
    out.finite.reserve(grid.values.size());
    return out;
}

void push(BodeSweep& sweep, std::complex<double> h) {
    const bool ok = std::isfinite(h.real()) && std::isfinite(h.imag());
    sweep.finite.push_back(ok);
    sweep.mag_db.push_back(ok ? 20.0 * std::log10(std::abs(h)) : std::numeric_limits<double>::infinity());
    sweep.phase_deg.push_back(ok ? degrees(std::arg(h)) : kNaN);
}

}  // namespace

std::string to_string(FrequencyUnit u) { return u == FrequencyUnit::hz ? "hz" : "rad"; }

double to_rad_per_s(double f, FrequencyUnit unit) {
    return unit == FrequencyUnit::hz ? 2.0 * std::numbers::pi * f : f;
}

FrequencyGrid log_grid(double fmin, double fmax, FrequencyUnit unit, std::size_t points_per_decade) {
    if (!(fmin > 0) || !(fmax > fmin)) throw ValidationError("frequency grid requires 0 < fmin < fmax");
    if (points_per_decade < 1) throw ValidationError("points per decade must be at least 1");
    const double lo = std::log10(fmin);
    const double hi = std::log10(fmax);
    const double steps = (hi - lo) * static_cast<double>(points_per_decade);
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(steps - 1e-9)));
    FrequencyGrid grid;
    grid.unit = unit;
    grid.values.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        grid.values.push_back(std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n)));
    }
    grid.values.front() = fmin;
    grid.values.back() = fmax;
    return grid;
}

std::complex<double> evaluate(const RatTf& tf, std::complex<double> s) {
    double num_scale = 0;
    double den_scale = 0;
    const std::complex<double> n = horner(tf.num, s, num_scale);
    const std::complex<double> d = horner(tf.den, s, den_scale);
    if (std::abs(d) <= 1e-14 * den_scale) return {std::numeric_limits<double>::infinity(), kNaN};
    const double g = tf.gain && tf.gain->value ? *tf.gain->value : 1.0;
    return g * n / d;
}

BodeSweep bode(const RatTf& tf, const FrequencyGrid& grid) {
    BodeSweep out = empty_sweep(grid);
    for (double f : grid.values) push(out, evaluate(tf, {0.0, to_rad_per_s(f, grid.unit)}));
    // Unwrap: each finite phase moves to the branch nearest the previous one.
    std::optional<double> prev;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out.finite[i]) continue;
        double& p = out.phase_deg[i];
        if (prev) p -= 360.0 * std::round((p - *prev) / 360.0);
        prev = p;
    }
    return out;
}

BodeSweep ideal_response(const ControllerSpec& spec, const FrequencyGrid& grid) {
    BodeSweep out = empty_sweep(grid);
    for (double f : grid.values) {
        const double w = to_rad_per_s(f, grid.unit);
        const std::complex<double> jw{0.0, w};
        std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, Differintegrator>) {
                    const double sign = s.action == Action::integrator ? -1.0 : 1.0;
                    const double lam = s.order.to_double();
                    const double scaled = s.range == Range::high ? w * s.T.to_double() : w;
                    out.finite.push_back(true);
                    out.mag_db.push_back(sign * 20.0 * lam * std::log10(scaled));
                    out.phase_deg.push_back(sign * 90.0 * lam);
                } else if constexpr (std::is_same_v<S, Fopid>) {
                    const double lam = s.lambda.to_double();
                    const double mu = s.mu.to_double();
                    const std::complex<double> h = s.kp.to_double() +
                                                   s.ki.to_double() * std::polar(std::pow(w, -lam), -lam * std::numbers::pi / 2) +
                                                   s.kd.to_double() * std::polar(std::pow(w, mu), mu * std::numbers::pi / 2);
                    push(out, h);
                } else if constexpr (std::is_same_v<S, FopdBracket>) {
                    const std::complex<double> base = s.kp.to_double() + jw * s.kd.to_double();
                    push(out, std::pow(base, s.mu.to_double()));
                } else {
                    const double lam = s.lambda.to_double();
                    const double alpha = s.alpha.to_double();
                    const double x = s.x.to_double();
                    const std::complex<double> ratio = (1.0 + jw * lam) / (1.0 + jw * (x * lam));
                    push(out, s.kc.to_double() * std::pow(x, alpha) * std::pow(ratio, alpha));
                }
            },
            spec);
    }
    return out;
}

namespace {

template <typename Target>
std::optional<Band> widest_run(const BodeSweep& sweep, Target target, double tol_deg) {
    std::optional<Band> best;
    std::size_t best_len = 0;
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    for (std::size_t i = 0; i <= sweep.size(); ++i) {
        const bool ok = i < sweep.size() && sweep.finite[i] && std::abs(sweep.phase_deg[i] - target(i)) <= tol_deg;
        if (ok) {
            if (run_len == 0) run_start = i;
            ++run_len;
            continue;
        }
        if (run_len > best_len) {
            best_len = run_len;
            best = Band{sweep.freqs[run_start], sweep.freqs[run_start + run_len - 1]};
        }
        run_len = 0;
    }
    return best;
}

}  // namespace

std::optional<Band> constant_phase_band(const BodeSweep& sweep, double target_deg, double tol_deg) {
    if (!(tol_deg > 0)) throw ValidationError("phase tolerance must be positive");
    return widest_run(sweep, [target_deg](std::size_t) { return target_deg; }, tol_deg);
}

FitReport fit_report(const BodeSweep& approx, const BodeSweep& ideal, Band band, double phase_tol_deg) {
    if (approx.freqs != ideal.freqs || approx.unit != ideal.unit)
        throw ValidationError("fit report requires both sweeps on the same grid");
    if (approx.freqs.empty()) throw ValidationError("fit report requires a nonempty grid");
    if (!(phase_tol_deg > 0)) throw ValidationError("phase tolerance must be positive");
    if (!(band.lo <= band.hi) || band.lo < approx.freqs.front() || band.hi > approx.freqs.back())
        throw ValidationError("fit band must lie within the evaluated grid");

    FitReport r;
    r.band = band;
    r.phase_tolerance_deg = phase_tol_deg;
    double phase_sum = 0;
    double mag_sum = 0;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        const double f = approx.freqs[i];
        if (f < band.lo || f > band.hi) continue;
        ++r.points;
        double pe = std::numeric_limits<double>::infinity();
        double me = std::numeric_limits<double>::infinity();
        if (approx.finite[i] && ideal.finite[i]) {
            pe = std::abs(approx.phase_deg[i] - ideal.phase_deg[i]);
            me = std::abs(approx.mag_db[i] - ideal.mag_db[i]);
        }
        r.max_phase_error_deg = std::max(r.max_phase_error_deg, pe);
        r.max_mag_error_db = std::max(r.max_mag_error_db, me);
        phase_sum += pe;
        mag_sum += me;
    }
    if (r.points == 0) throw ValidationError("fit band contains no grid points");
    r.mean_phase_error_deg = phase_sum / static_cast<double>(r.points);
    r.mean_mag_error_db = mag_sum / static_cast<double>(r.points);
    r.constant_phase = widest_run(
        approx, [&ideal](std::size_t i) { return ideal.finite[i] ? ideal.phase_deg[i] : kNaN; }, phase_tol_deg);
    return r;
}

}  // namespace fracreal
