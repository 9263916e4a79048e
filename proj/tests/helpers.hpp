#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "schubert/schubert.hpp"

namespace testing_support {

using namespace schubert;

inline SchurExpansion schur_exp(std::initializer_list<std::pair<std::vector<int>, long>> items) {
    SchurExpansion x;
    for (const auto& [parts, c] : items) x.add(Partition(parts), c);
    return x;
}

inline QExpansion q_exp(std::initializer_list<std::pair<std::vector<int>, long>> items) {
    QExpansion x;
    for (const auto& [parts, c] : items) x.add(StrictPartition(parts), c);
    return x;
}

/// Library expansion as a plain map, for comparison with the oracle.
inline std::map<std::vector<int>, std::int64_t> as_map(const SchurExpansion& x) {
    std::map<std::vector<int>, std::int64_t> out;
    for (const auto& [k, v] : x.coefficients()) out[k.parts()] = v.get_si();
    return out;
}

/// Uniformly random homogeneous c-polynomial of degree d with coefficients in [-range, range].
inline CPolynomial random_homogeneous(std::mt19937_64& rng, int d, int terms, int range = 5,
                                      std::optional<int> max_index = {}) {
    CPolynomial p;
    const auto monomials = enumerate_partitions(d, max_index, std::nullopt);
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    std::uniform_int_distribution<int> coeff(-range, range);
    for (int t = 0; t < terms; ++t) p.add_term(CMonomial::from_partition(monomials[pick(rng)]), coeff(rng));
    return p;
}

/// Random sparse polynomial mixing all generator families, degree up to max_degree.
inline CPolynomial random_mixed(std::mt19937_64& rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> deg(0, max_degree), coeff(-9, 9), fam(0, 3), idx(1, 3);
    CPolynomial p;
    for (int t = 0; t < terms; ++t) {
        CMonomial m;
        int left = deg(rng);
        while (left > 0) {
            const int f = fam(rng);
            Generator g = f == 0 ? chern(std::min(idx(rng), left)) : f == 1 ? chern(std::min(idx(rng), left), Family::CPrime)
                         : f == 2 ? v1() : v2();
            m = m * CMonomial(g);
            left -= g.degree();
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

} // namespace testing_support
