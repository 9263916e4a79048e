#pragma once

#include <vector>

#include "cpolynomial.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace schubert {

/// Q~_{i,j} = c_i c_j + 2 sum_{p=1..j} (-1)^p c_{i+p} c_{j-p}, for i >= j >= 0.
inline CPolynomial qtilde_pair(int i, int j) {
    if (i < j || j < 0) throw PreconditionError("qtilde_pair: need i >= j >= 0");
    CPolynomial out = c(i) * c(j);
    for (int p = 1; p <= j; ++p) {
        CPolynomial t = 2 * (c(i + p) * c(j - p));
        out += p % 2 ? -t : t;
    }
    return out;
}

namespace detail {

inline Partition remove_positions(const Partition& mu, std::size_t a, std::size_t b = static_cast<std::size_t>(-1)) {
    std::vector<int> rest;
    for (std::size_t k = 0; k < mu.length(); ++k)
        if (k != a && k != b) rest.push_back(mu[k]);
    return Partition(std::move(rest));  // removal keeps the parts sorted
}

} // namespace detail

/// Q~_mu in the Chern classes c_i, for any partition mu (strictness not required).
/// Odd length: expansion along the single parts; even length: along pairs (mu_1, mu_p).
/// Parts are removed by position. Memoized.
inline const CPolynomial& qtilde(const Partition& mu) {
    static MemoCache<Partition, CPolynomial> cache;
    return cache.get(mu, [&]() -> CPolynomial {
        const std::size_t l = mu.length();
        if (l == 0) return CPolynomial(1);
        if (l == 1) return c(mu[0]);
        if (l == 2) return qtilde_pair(mu[0], mu[1]);
        CPolynomial out;
        if (l % 2 == 1) {
            for (std::size_t p = 0; p < l; ++p) {
                CPolynomial t = c(mu[p]) * qtilde(detail::remove_positions(mu, p));
                out += p % 2 == 0 ? t : -t;  // (-1)^{p-1} with 1-based p
            }
        } else {
            for (std::size_t p = 1; p < l; ++p) {
                CPolynomial t = qtilde_pair(mu[0], mu[p]) * qtilde(detail::remove_positions(mu, 0, p));
                out += p % 2 == 1 ? t : -t;  // (-1)^p with 1-based p
            }
        }
        return out;
    });
}

inline const CPolynomial& qtilde(const StrictPartition& mu) { return qtilde(mu.as_partition()); }

} // namespace schubert
