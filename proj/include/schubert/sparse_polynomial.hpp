#pragma once

#include <map>
#include <utility>

#include "integer.hpp"

namespace schubert {

/// Sparse polynomial over Z. `Monomial` must be default-constructible (the unit),
/// equality-comparable and closed under `operator*`; `Order` fixes term iteration order.
/// Zero coefficients are never stored.
template <class Monomial, class Order>
class SparsePolynomial {
public:
    using monomial_type = Monomial;
    using Terms = std::map<Monomial, Integer, Order>;

    SparsePolynomial() = default;

    explicit SparsePolynomial(const Integer& constant) {
        if (constant != 0) terms_.emplace(Monomial{}, constant);
    }
    explicit SparsePolynomial(long constant) : SparsePolynomial(Integer(constant)) {}
    explicit SparsePolynomial(int constant) : SparsePolynomial(Integer(constant)) {}

    static SparsePolynomial term(const Monomial& m, const Integer& coeff = 1) {
        SparsePolynomial p;
        p.add_term(m, coeff);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Monomial& m, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SparsePolynomial& operator*=(const Integer& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator-(SparsePolynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) { return a *= s; }
    friend SparsePolynomial operator*(const Integer& s, SparsePolynomial a) { return a *= s; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

template <class Poly>
Poly power(const Poly& base, unsigned exponent) {
    Poly result(1);
    Poly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

} // namespace schubert
