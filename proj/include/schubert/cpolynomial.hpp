#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "sparse_polynomial.hpp"

namespace schubert {

/// C = Chern classes c_i, CPrime = a second bundle's c'_j, V1/V2 = degree-one line classes.
enum class Family { C, CPrime, V1, V2 };

struct Generator {
    Family family = Family::C;
    int index = 0;  // 0 for V1/V2

    int degree() const noexcept { return family == Family::C || family == Family::CPrime ? index : 1; }

    std::string to_string() const {
        switch (family) {
            case Family::C: return "c" + std::to_string(index);
            case Family::CPrime: return "c'" + std::to_string(index);
            case Family::V1: return "v1";
            case Family::V2: return "v2";
        }
        return "?";
    }

    friend auto operator<=>(const Generator&, const Generator&) = default;
    friend bool operator==(const Generator&, const Generator&) = default;
};

inline Generator chern(int i, Family f = Family::C) {
    if (i <= 0) throw PreconditionError("Chern generator index must be positive");
    return {f, i};
}
inline Generator v1() { return {Family::V1, 0}; }
inline Generator v2() { return {Family::V2, 0}; }

/// Product of generator powers, stored sorted by generator with positive exponents.
class CMonomial {
public:
    using Factor = std::pair<Generator, int>;

    CMonomial() = default;
    explicit CMonomial(const Generator& g, int exponent = 1) {
        if (exponent > 0) factors_.emplace_back(g, exponent);
    }

    /// c_{nu_1} c_{nu_2} ... in the given family.
    static CMonomial from_partition(const Partition& nu, Family f = Family::C) {
        CMonomial m;
        for (int part : nu) m = m * CMonomial(chern(part, f));
        return m;
    }

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }

    int degree() const noexcept {
        int d = 0;
        for (const auto& [g, e] : factors_) d += g.degree() * e;
        return d;
    }

    int exponent(const Generator& g) const noexcept {
        for (const auto& [h, e] : factors_)
            if (h == g) return e;
        return 0;
    }

    /// The multiset of indices of a single-family c-monomial, as a partition.
    Partition index_partition() const {
        std::vector<int> parts;
        for (const auto& [g, e] : factors_)
            for (int k = 0; k < e; ++k) parts.push_back(g.index);
        std::sort(parts.begin(), parts.end(), std::greater<>{});
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string s;
        for (const auto& [g, e] : factors_) {
            if (!s.empty()) s += '*';
            s += g.to_string();
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

    friend CMonomial operator*(const CMonomial& a, const CMonomial& b) {
        CMonomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                out.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                out.factors_.push_back(*j++);
            } else {
                out.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend bool operator==(const CMonomial&, const CMonomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Weighted degree descending, then graded reverse lexicographic: scanning from the
/// largest generator down, the monomial with the smaller exponent comes first.
/// For c-monomials of degree 4 this lists c1^4, c1^2*c2, c2^2, c1*c3, c4.
struct GrevlexFirst {
    bool operator()(const CMonomial& a, const CMonomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        auto i = a.factors().rbegin(), j = b.factors().rbegin();
        while (i != a.factors().rend() && j != b.factors().rend()) {
            if (i->first == j->first) {
                if (i->second != j->second) return i->second < j->second;
                ++i;
                ++j;
            } else {
                // the larger generator is absent (exponent 0) from the other monomial
                return j->first < i->first ? false : true;
            }
        }
        return i == a.factors().rend() && j != b.factors().rend();
    }
};

using CPolynomial = SparsePolynomial<CMonomial, GrevlexFirst>;

inline CPolynomial gen(const Generator& g) { return CPolynomial::term(CMonomial(g)); }
inline CPolynomial c(int i, Family f = Family::C) {
    if (i == 0) return CPolynomial(1);
    if (i < 0) return {};
    return gen(chern(i, f));
}

inline bool is_homogeneous(const CPolynomial& p) {
    std::optional<int> d;
    for (const auto& [m, coeff] : p.terms()) {
        if (d && *d != m.degree()) return false;
        d = m.degree();
    }
    return true;
}

/// Weighted degree of a homogeneous polynomial; nullopt for the zero polynomial.
/// Throws PreconditionError on inhomogeneous input.
inline std::optional<int> homogeneous_degree(const CPolynomial& p, const std::string& context = "polynomial") {
    if (!is_homogeneous(p)) throw PreconditionError(context + ": input is not homogeneous");
    if (p.is_zero()) return std::nullopt;
    return p.terms().begin()->first.degree();
}

inline std::set<Generator> generators_used(const CPolynomial& p) {
    std::set<Generator> out;
    for (const auto& [m, coeff] : p.terms())
        for (const auto& [g, e] : m.factors()) out.insert(g);
    return out;
}

/// Evaluates p in any commutative ring R given an image for each generator.
/// R must be constructible from Integer and support + and *.
template <class R, class ImageFn>
R evaluate(const CPolynomial& p, ImageFn&& image) {
    std::map<Generator, std::vector<R>> powers;  // powers[g][e] = image(g)^e
    auto power_of = [&](const Generator& g, int e) -> const R& {
        auto& table = powers[g];
        if (table.empty()) {
            table.push_back(R(Integer(1)));
            table.push_back(image(g));
        }
        while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
        return table[static_cast<std::size_t>(e)];
    };
    R total(Integer(0));
    for (const auto& [m, coeff] : p.terms()) {
        R t(coeff);
        for (const auto& [g, e] : m.factors()) t = t * power_of(g, e);
        total = total + t;
    }
    return total;
}

/// Simultaneous substitution. Each image must be homogeneous of its generator's degree (or zero).
inline CPolynomial specialize(const CPolynomial& p, const std::map<Generator, CPolynomial>& assignment) {
    for (const auto& [g, img] : assignment) {
        const auto d = homogeneous_degree(img, "specialize");
        if (d && *d != g.degree())
            throw PreconditionError("specialize: image of " + g.to_string() + " has degree " +
                                    std::to_string(*d) + ", expected " + std::to_string(g.degree()));
    }
    return evaluate<CPolynomial>(p, [&](const Generator& g) {
        auto it = assignment.find(g);
        return it == assignment.end() ? gen(g) : it->second;
    });
}

/// Sets c_k of the given family to zero for k > rank (a bundle of that rank).
inline CPolynomial truncate_rank(const CPolynomial& p, Family f, int rank) {
    CPolynomial out;
    for (const auto& [m, coeff] : p.terms()) {
        bool vanishes = false;
        for (const auto& [g, e] : m.factors())
            if (g.family == f && g.index > rank) vanishes = true;
        if (!vanishes) out.add_term(m, coeff);
    }
    return out;
}

/// Renames every generator of family `from` to family `to` (same index).
inline CPolynomial rename_family(const CPolynomial& p, Family from, Family to) {
    CPolynomial out;
    for (const auto& [m, coeff] : p.terms()) {
        CMonomial r;
        for (const auto& [g, e] : m.factors())
            r = r * CMonomial(g.family == from ? Generator{to, g.index} : g, e);
        out.add_term(r, coeff);
    }
    return out;
}

/// Text in the expression grammar, e.g. "c1^3 + 3*c1*c2 + 2*c3". A leading negative term prints as "-c2".
inline std::string to_string(const CPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, coeff] : p.terms()) {
        Integer mag = abs(coeff);
        if (first) {
            if (coeff < 0) s += '-';
        } else {
            s += coeff < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_unit()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += m.to_string();
        }
    }
    return s;
}

} // namespace schubert
