#pragma once

// Frequency response of realized transfer functions and of the ideal
// fractional-order references, plus fitting metrics.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracreal/controllers.hpp"

namespace fracreal {

enum class FrequencyUnit { hz, rad };

std::string to_string(FrequencyUnit u);
/// Conversion to rad/s, the internal unit.
double to_rad_per_s(double f, FrequencyUnit unit);

struct FrequencyGrid {
    std::vector<double> values;  // strictly increasing, in `unit`
    FrequencyUnit unit = FrequencyUnit::hz;
};

inline constexpr std::size_t kDefaultPointsPerDecade = 50;

/// Log-spaced grid from fmin to fmax inclusive, `points_per_decade` steps per
/// decade (rounded up when the span is not a whole number of steps).
FrequencyGrid log_grid(double fmin, double fmax, FrequencyUnit unit,
                       std::size_t points_per_decade = kDefaultPointsPerDecade);

struct BodeSweep {
    std::vector<double> freqs;
    FrequencyUnit unit = FrequencyUnit::hz;
    std::vector<double> mag_db;
    std::vector<double> phase_deg;
    /// False where the response is not finite (a pole on the grid).
    std::vector<bool> finite;

    [[nodiscard]] std::size_t size() const { return freqs.size(); }
};

/// gain * num(s) / den(s) in double precision, Horner on s.
std::complex<double> evaluate(const RatTf& tf, std::complex<double> s);

/// Phase unwrapped from the lowest frequency.
BodeSweep bode(const RatTf& tf, const FrequencyGrid& grid);

/// Ideal fractional-order response with analytic phase. A high-range
/// differintegrator is referenced to (omega T)^(-+order).
BodeSweep ideal_response(const ControllerSpec& spec, const FrequencyGrid& grid);

struct Band {
    double lo = 0;
    double hi = 0;
    friend bool operator==(const Band&, const Band&) = default;
};

/// Widest contiguous run of finite grid points with |phase - target| <= tol.
/// Returns nullopt when no point qualifies.
std::optional<Band> constant_phase_band(const BodeSweep& sweep, double target_deg, double tol_deg);

struct FitReport {
    Band band;
    std::size_t points = 0;
    double max_phase_error_deg = 0;
    double mean_phase_error_deg = 0;
    double max_mag_error_db = 0;
    double mean_mag_error_db = 0;
    double phase_tolerance_deg = 0;
    /// Widest run where the approximation tracks the ideal phase within tolerance.
    std::optional<Band> constant_phase;
};

/// Errors over grid points inside `band` (inclusive). Both sweeps must share
/// one grid; a band that leaves the grid is rejected.
FitReport fit_report(const BodeSweep& approx, const BodeSweep& ideal, Band band, double phase_tol_deg = 5.0);

}  // namespace fracreal
