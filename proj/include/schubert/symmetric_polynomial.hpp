#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "expansion.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "sparse_polynomial.hpp"

namespace schubert {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}; trailing zeros are stripped so the unit is empty.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) { trim(); }

    static ExponentVector variable(int i) {  // x_i, 1-based
        std::vector<int> e(static_cast<std::size_t>(i), 0);
        e.back() = 1;
        return ExponentVector(std::move(e));
    }

    const std::vector<int>& exponents() const noexcept { return e_; }
    int operator[](std::size_t i) const noexcept { return i < e_.size() ? e_[i] : 0; }

    friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
        std::vector<int> e(std::max(a.e_.size(), b.e_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
        return ExponentVector(std::move(e));
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }
    std::vector<int> e_;
};

/// Lexicographically largest exponent vector first.
struct LexFirst {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const std::size_t n = std::max(a.exponents().size(), b.exponents().size());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

using XPolynomial = SparsePolynomial<ExponentVector, LexFirst>;

inline XPolynomial x_var(int i) { return XPolynomial::term(ExponentVector::variable(i)); }

/// e_1, ..., e_k of the given linear forms (or any ring elements).
inline std::vector<XPolynomial> elementary_of(const std::vector<XPolynomial>& roots) {
    std::vector<XPolynomial> e(roots.size() + 1);
    e[0] = XPolynomial(1);
    for (std::size_t r = 0; r < roots.size(); ++r)
        for (std::size_t k = r + 1; k >= 1; --k) e[k] += e[k - 1] * roots[r];
    return e;
}

/// Schur polynomial s_lambda(x_1..x_n) as a sum of tableau monomials. Memoized.
inline const XPolynomial& schur_polynomial(const Partition& lambda, int n) {
    static MemoCache<std::pair<Partition, int>, XPolynomial> cache;
    return cache.get({lambda, n}, [&] {
        XPolynomial p;
        for (const auto& t : enumerate_ssyt(lambda, n)) p.add_term(ExponentVector(t.content(n)), 1);
        return p;
    });
}

/// Expands a symmetric polynomial in x_1..x_n over Schur polynomials by repeatedly
/// removing the lexicographically leading monomial. Throws if p is not symmetric.
inline SchurExpansion peel_schur(XPolynomial p, int n) {
    SchurExpansion out;
    while (!p.is_zero()) {
        const auto& [lead, coeff] = *p.terms().begin();
        const auto& e = lead.exponents();
        if (static_cast<int>(e.size()) > n || !std::is_sorted(e.begin(), e.end(), std::greater<>{}))
            throw PreconditionError("peel_schur: polynomial is not symmetric in x1..x" + std::to_string(n));
        const Partition kappa(e);
        const Integer a = coeff;
        out.add(kappa, a);
        p -= a * schur_polynomial(kappa, n);
    }
    return out;
}

} // namespace schubert
