#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace schubert {

/// Determinant over a commutative ring by row-wise minor expansion, memoized on the set
/// of used columns (2^n states). No division, so it works for polynomial entries.
template <class R>
R determinant(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    if (n > 20) throw PreconditionError("determinant: matrix too large for minor expansion");
    for (const auto& row : m)
        if (row.size() != n) throw PreconditionError("determinant: matrix is not square");

    const std::uint32_t full = (1u << n) - 1u;
    std::vector<R> partial(full + 1u, R(0));
    std::vector<bool> reached(full + 1u, false);
    partial[0] = R(1);
    reached[0] = true;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!reached[mask]) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t col = 0; col < n; ++col) {
            const std::uint32_t bit = 1u << col;
            if (mask & bit) continue;
            const auto& entry = m[row][col];
            if (entry == R(0)) continue;
            // inversions introduced: already-used columns to the right of col
            const bool negate = std::popcount(mask >> col) % 2 == 1;
            R term = partial[mask] * entry;
            if (negate) {
                partial[mask | bit] = partial[mask | bit] - term;
            } else {
                partial[mask | bit] = partial[mask | bit] + term;
            }
            reached[mask | bit] = true;
        }
        partial[mask] = R(0);  // no longer needed
    }
    return partial[full];
}

} // namespace schubert
