#pragma once

// Fraction-free (Bareiss) elimination over an exact coefficient ring.

#include <cstddef>
#include <utility>
#include <vector>

#include "fracreal/exact.hpp"

namespace fracreal {

/// Dense row-major matrix over a coefficient ring.
template <Coefficient C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, C(BigRat(0))) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    C& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const C& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<C> data_;
};

/// Solution x_i = numerators[i] / denominator. When the matrix is rank
/// deficient, `defect` is n - rank and free unknowns are set to zero.
template <Coefficient C>
struct LinearSolution {
    std::vector<C> numerators;
    C denominator;
    std::size_t defect = 0;
};

/// Solves A x = b exactly. Every division performed is exact in the ring, so
/// no fractions appear until the final common denominator.
/// Throws MathError("no solution") for an inconsistent rank-deficient system.
template <Coefficient C>
LinearSolution<C> solve_fraction_free(const Matrix<C>& a, const std::vector<C>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ValidationError("solve_fraction_free requires a square matrix");
    if (b.size() != n) throw ValidationError("right-hand side length does not match the matrix");

    Matrix<C> m(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
        m(r, n) = b[r];
    }

    C previous = C(BigRat(1));
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && is_zero(m(pivot, col))) ++pivot;
        if (pivot == n) continue;
        m.swap_rows(pivot, row);
        for (std::size_t r = row + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c <= n; ++c)
                m(r, c) = exact_quotient(m(row, col) * m(r, c) - m(r, col) * m(row, c), previous);
            m(r, col) = C(BigRat(0));
        }
        previous = m(row, col);
        pivot_cols.push_back(col);
        ++row;
    }
    const std::size_t rank = row;
    for (std::size_t r = rank; r < n; ++r)
        if (!is_zero(m(r, n))) throw MathError("no solution");

    LinearSolution<C> out;
    out.defect = n - rank;
    out.numerators.assign(n, C(BigRat(0)));
    if (rank == 0) {
        out.denominator = C(BigRat(1));
        return out;
    }
    // Back substitution on scaled unknowns d * x; each step divides exactly
    // because the scaled unknowns are minors of the pivot submatrix.
    const C det = m(rank - 1, pivot_cols[rank - 1]);
    for (std::size_t i = rank; i-- > 0;) {
        C acc = det * m(i, n);
        for (std::size_t k = i + 1; k < rank; ++k) acc = acc - m(i, pivot_cols[k]) * out.numerators[pivot_cols[k]];
        out.numerators[pivot_cols[i]] = exact_quotient(acc, m(i, pivot_cols[i]));
    }
    out.denominator = det;
    return out;
}

/// Symbolic convenience: per-unknown fractions, GCD-reduced.
inline std::vector<ParamFraction> to_fractions(const LinearSolution<ParamPoly>& s) {
    std::vector<ParamFraction> out;
    out.reserve(s.numerators.size());
    for (const auto& n : s.numerators) out.push_back(ParamFraction(n, s.denominator).reduced());
    return out;
}

}  // namespace fracreal
