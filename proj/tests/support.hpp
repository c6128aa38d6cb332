#pragma once

// Shared helpers for the test binaries. The oracles here are deliberately
// independent of the library routines they check.

#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "fracreal/approx.hpp"

namespace testing {

using namespace fracreal;

inline BigRat q(const char* s) { return BigRat::parse(s); }
inline ParamPoly P(const char* s) { return ParamPoly::parse(s); }

/// Ascending integer coefficients.
inline RatPoly ipoly(std::initializer_list<long> c) {
    std::vector<BigRat> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

/// Descending integer coefficients.
inline RatPoly dpoly(std::initializer_list<long> c) {
    std::vector<BigRat> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::vector<BigRat>(v.rbegin(), v.rend()));
}

/// Descending decimal coefficients, read exactly.
inline RatPoly dpoly(std::initializer_list<const char*> c) {
    std::vector<BigRat> v;
    for (const char* x : c) v.push_back(BigRat::parse(x));
    return RatPoly(std::vector<BigRat>(v.rbegin(), v.rend()));
}

/// Taylor coefficients of num/den through `order` by the long-division
/// recurrence d0 c_i = n_i - sum_{j>=1} d_j c_{i-j}.
template <typename C>
std::vector<C> taylor_of_ratio(const Poly<C>& num, const Poly<C>& den, std::size_t order) {
    std::vector<C> c(order + 1, C(BigRat(0)));
    const C d0 = den[0];
    for (std::size_t i = 0; i <= order; ++i) {
        C acc = num[i];
        for (std::size_t j = 1; j <= i; ++j) acc = acc - den[j] * c[i - j];
        c[i] = exact_quotient(acc, d0);
    }
    return c;
}

/// Naive complex evaluation with std::pow on each monomial.
inline std::complex<double> naive_eval(const RatPoly& p, std::complex<double> s) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        acc += p.coeffs()[k].to_double() * std::pow(s, static_cast<int>(k));
    return acc;
}

/// "64 112 56 7" style listing, highest power first.
inline std::string to_string_desc(const RatPoly& p) {
    std::string out;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out += (out.empty() ? "" : " ") + it->to_string();
    return out;
}

inline BigRat random_rat(std::mt19937& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> n(lo * max_den, hi * max_den);
    std::uniform_int_distribution<long> d(1, max_den);
    return BigRat(n(rng), d(rng));
}

inline BigRat random_nonzero_rat(std::mt19937& rng, long lo, long hi, long max_den) {
    BigRat r;
    do r = random_rat(rng, lo, hi, max_den);
    while (r.is_zero());
    return r;
}

}  // namespace testing
