#pragma once

// Reference analog approximations of s^lambda: Oustaloup, modified Oustaloup
// and Carlson. Numeric only.
//
// Oustaloup (N recursions, band [wb, wh]):
//   H(s) = K prod_{k=-N..N} (s + w'_k) / (s + w_k)
//   w'_k = wb (wh/wb)^((k + N + (1 - lambda)/2) / (2N + 1))
//   w_k  = wb (wh/wb)^((k + N + (1 + lambda)/2) / (2N + 1))
//   K chosen so that |H(j wu)| = wu^lambda, wu = sqrt(wb wh).
// Modified Oustaloup (shaping constants b, d):
//   H(s) = (d wh / b)^lambda (d s^2 + b wh s) / (d (1 - lambda) s^2 + b wh s + d lambda)
//          * prod_{k=-N..N} (s + w'_k) / (s + w_k)
// Carlson (lambda = m/q), from H_0 = 1:
//   H_i = H_{i-1} ((q - 1) H_{i-1}^q + (q + 1) s^m) / ((q + 1) H_{i-1}^q + (q - 1) s^m)

#include <cstddef>

#include "fracreal/approx.hpp"

namespace fracreal {

struct BaselineConfig {
    double lambda = 0.5;  // in (0, 1)
    double wb = 1e-3;     // rad/s
    double wh = 1e3;      // rad/s
    std::size_t n = 3;    // recursion depth N
    double b = 10;
    double d = 9;
    /// Return the reciprocal, approximating s^-lambda.
    bool integrator = false;
};

/// Throws ValidationError on an invalid configuration.
void validate(const BaselineConfig& cfg);

/// Order 2N + 1. Zero and pole frequencies are converted exactly from double.
RatTf oustaloup(const BaselineConfig& cfg);

/// Order 2N + 3.
RatTf modified_oustaloup(const BaselineConfig& cfg);

/// lambda = m/q in lowest terms with q <= 4; q == 1 gives s^m directly.
/// Degree grows as d_{k+1} = (q + 1) d_k + m.
RatTf carlson(const BigRat& lambda, std::size_t iterations, bool integrator = false);

}  // namespace fracreal
