#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace schubert {

namespace detail {

/// In-place Gauss-Jordan reduction restricted to the first `elim_cols` columns; the
/// remaining columns are carried along. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m, std::size_t elim_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < elim_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline bool block_determined(const RationalMatrix& r, const std::vector<std::size_t>& pivots,
                             std::size_t cols, std::size_t block_begin, std::size_t block_end) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // null vector: x_f = 1, x_{pivot(row)} = -r(row, f)
        if (f >= block_begin && f < block_end) return false;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            if (pivots[row] >= block_begin && pivots[row] < block_end && r(row, f) != 0) return false;
    }
    return true;
}

} // namespace detail

struct ExactSolution {
    std::vector<Rational> x;
    /// Whether every solution agrees with `x` on the requested coordinate block.
    bool unique_on_block = false;
};

inline constexpr std::size_t kWholeBlock = std::numeric_limits<std::size_t>::max();

/// Solves A x = b exactly. Free variables are set to zero. Throws InconsistentSystem
/// when b is not in the column space.
inline ExactSolution solve_exact(const RationalMatrix& a, const std::vector<Rational>& b,
                                 std::size_t block_begin = 0, std::size_t block_end = kWholeBlock) {
    if (b.size() != a.rows()) throw PreconditionError("solve_exact: right-hand side has wrong length");
    const std::size_t n = a.cols();
    block_end = std::min(block_end, n);
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
        for (std::size_t j = 0; j <= n; ++j) aug(i, j).canonicalize();
    }
    const auto pivots = detail::reduce_row_echelon(aug, n);
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (aug(i, n) != 0) throw InconsistentSystem("solve_exact: system is inconsistent");
    ExactSolution sol;
    sol.x.assign(n, Rational(0));
    for (std::size_t row = 0; row < pivots.size(); ++row) sol.x[pivots[row]] = aug(row, n);
    sol.unique_on_block = detail::block_determined(aug, pivots, n, block_begin, block_end);
    return sol;
}

/// As solve_exact, but demands uniqueness on the block.
inline std::vector<Rational> solve_unique(const RationalMatrix& a, const std::vector<Rational>& b,
                                          std::size_t block_begin = 0, std::size_t block_end = kWholeBlock) {
    auto sol = solve_exact(a, b, block_begin, block_end);
    if (!sol.unique_on_block) throw NonUniqueSolution("solve_exact: solution is not unique on the requested block");
    return std::move(sol.x);
}

inline std::size_t rank(RationalMatrix a) { return detail::reduce_row_echelon(a, a.cols()).size(); }

/// Precomputed solver for repeated right-hand sides against a fixed matrix whose leading
/// `block` columns are the coordinates of interest (e.g. a basis) and whose remaining
/// columns may be redundant (e.g. spanning vectors of an ideal).
class BlockSolver {
public:
    BlockSolver() = default;
    BlockSolver(const RationalMatrix& a, std::size_t block) : rows_(a.rows()), block_(block) {
        const std::size_t n = a.cols();
        RationalMatrix aug(rows_, n + rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
            aug(i, n + i) = 1;
        }
        const auto pivots = detail::reduce_row_echelon(aug, n);
        rank_ = pivots.size();
        unique_ = detail::block_determined(aug, pivots, n, 0, block_);
        if (unique_) {
            functionals_.assign(block_, std::vector<Rational>(rows_));
            for (std::size_t row = 0; row < pivots.size(); ++row)
                if (pivots[row] < block_)
                    for (std::size_t k = 0; k < rows_; ++k) functionals_[pivots[row]][k] = aug(row, n + k);
        }
        for (std::size_t row = rank_; row < rows_; ++row) {
            std::vector<Rational> check(rows_);
            for (std::size_t k = 0; k < rows_; ++k) check[k] = aug(row, n + k);
            consistency_.push_back(std::move(check));
        }
    }

    std::size_t rank() const noexcept { return rank_; }
    bool block_unique() const noexcept { return unique_; }

    /// Block coordinates of some solution of A x = b (all solutions agree there).
    std::vector<Rational> coordinates(const std::vector<Rational>& b) const {
        if (b.size() != rows_) throw PreconditionError("BlockSolver: right-hand side has wrong length");
        if (!unique_) throw NonUniqueSolution("BlockSolver: block coordinates are not determined");
        for (const auto& check : consistency_)
            if (dot(check, b) != 0) throw InconsistentSystem("BlockSolver: right-hand side outside column space");
        std::vector<Rational> out(block_);
        for (std::size_t j = 0; j < block_; ++j) out[j] = dot(functionals_[j], b);
        return out;
    }

private:
    static Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
        Rational s = 0;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] != 0 && v[k] != 0) s += u[k] * v[k];
        return s;
    }

    std::size_t rows_ = 0, block_ = 0, rank_ = 0;
    bool unique_ = false;
    std::vector<std::vector<Rational>> functionals_;
    std::vector<std::vector<Rational>> consistency_;
};

} // namespace schubert
