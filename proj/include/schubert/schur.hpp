#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cpolynomial.hpp"
#include "determinant.hpp"
#include "expansion.hpp"
#include "linear_solve.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "symmetric_polynomial.hpp"

namespace schubert {

/// A vector bundle seen only through its Chern generators. An unset rank means the
/// universal (stable) bundle; a set rank makes c_k vanish for k > rank.
struct BundleSymbol {
    Family family = Family::C;
    std::optional<int> rank;

    static BundleSymbol zero(Family f) { return {f, 0}; }
};

/// Applies the rank specialization of a bundle (c_k -> 0 for k > rank).
inline CPolynomial restrict_to(const CPolynomial& p, const BundleSymbol& b) {
    return b.rank ? truncate_rank(p, b.family, *b.rank) : p;
}

namespace detail {

/// Universal h_k in the C family from sum_{i=0..k} (-1)^i c_i h_{k-i} = [k = 0].
inline const CPolynomial& universal_complete(int k) {
    static MemoCache<int, CPolynomial> cache;
    return cache.get(k, [k] {
        CPolynomial h;
        if (k == 0) return CPolynomial(1);
        for (int i = 1; i <= k; ++i) {
            CPolynomial t = c(i) * universal_complete(k - i);
            if (i % 2 == 0) t = -t;
            h += t;
        }
        return h;
    });
}

inline void require_distinct(const BundleSymbol& e, const BundleSymbol& f) {
    if (e.family == f.family) throw PreconditionError("bundles E and F must use distinct generator families");
    for (auto fam : {e.family, f.family})
        if (fam != Family::C && fam != Family::CPrime)
            throw PreconditionError("bundles must use a Chern generator family");
}

} // namespace detail

/// h_k(E) = s_k(E) in the Chern generators of E; 0 for k < 0.
inline CPolynomial complete_from_elementary(int k, const BundleSymbol& e = {}) {
    if (k < 0) return {};
    CPolynomial h = detail::universal_complete(k);
    if (e.family != Family::C) h = rename_family(h, Family::C, e.family);
    return restrict_to(h, e);
}

/// s_k(E - F), the degree-k coefficient of prod_f (1 - f z) / prod_e (1 - e z).
inline CPolynomial supersymmetric_s(int k, const BundleSymbol& e, const BundleSymbol& f) {
    detail::require_distinct(e, f);
    CPolynomial out;
    for (int j = 0; j <= k; ++j) {
        CPolynomial t = restrict_to(c(j, f.family), f) * complete_from_elementary(k - j, e);
        out += j % 2 ? -t : t;
    }
    return out;
}

/// s_lambda(E - F) = det( s_{lambda_i - i + j}(E - F) ).
inline CPolynomial schur_jt(const Partition& lambda, const BundleSymbol& e, const BundleSymbol& f) {
    detail::require_distinct(e, f);
    const int l = static_cast<int>(lambda.length());
    std::map<int, CPolynomial> entries;
    auto entry = [&](int k) -> const CPolynomial& {
        auto it = entries.find(k);
        if (it == entries.end()) it = entries.emplace(k, supersymmetric_s(k, e, f)).first;
        return it->second;
    };
    std::vector<std::vector<CPolynomial>> m(static_cast<std::size_t>(l), std::vector<CPolynomial>(static_cast<std::size_t>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = entry(lambda[static_cast<std::size_t>(i)] - i + j);
    return determinant(m);
}

/// The classical s_lambda(E).
inline CPolynomial schur_jt(const Partition& lambda, const BundleSymbol& e = {}) {
    const Family other = e.family == Family::C ? Family::CPrime : Family::C;
    return schur_jt(lambda, e, BundleSymbol::zero(other));
}

/// s_lambda = det( c_{mu_i - i + j} ) with mu the conjugate of lambda. Memoized.
inline const CPolynomial& schur_dual_jt(const Partition& lambda) {
    static MemoCache<Partition, CPolynomial> cache;
    return cache.get(lambda, [&] {
        const Partition mu = conjugate(lambda);
        const std::size_t l = mu.length();
        std::vector<std::vector<CPolynomial>> m(l, std::vector<CPolynomial>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                m[i][j] = c(mu[i] - static_cast<int>(i) + static_cast<int>(j));
        return determinant(m);
    });
}

inline CPolynomial from_schur(const SchurExpansion& x) {
    CPolynomial p;
    for (const auto& [lambda, a] : x.coefficients()) p += a * schur_dual_jt(lambda);
    return p;
}

namespace detail {

/// One degree of the Schur-to-monomial transition, for Schur functions of length <= bound
/// with c_k = 0 for k > bound.
struct SchurSlice {
    std::vector<Partition> basis;
    std::map<CMonomial, std::size_t, GrevlexFirst> row_of;
    BlockSolver solver;
};

inline const SchurSlice& schur_slice(int d, std::optional<int> bound) {
    static MemoCache<std::pair<int, int>, std::shared_ptr<const SchurSlice>> cache;
    const auto& ptr = cache.get({d, bound.value_or(-1)}, [&] {
        auto slice = std::make_shared<SchurSlice>();
        slice->basis = enumerate_partitions(d, std::nullopt, bound);
        const auto monomials = enumerate_partitions(d, bound, std::nullopt);
        for (std::size_t r = 0; r < monomials.size(); ++r)
            slice->row_of.emplace(CMonomial::from_partition(monomials[r]), r);
        RationalMatrix a(monomials.size(), slice->basis.size());
        for (std::size_t col = 0; col < slice->basis.size(); ++col) {
            CPolynomial s = schur_dual_jt(slice->basis[col]);
            if (bound) s = truncate_rank(s, Family::C, *bound);
            for (const auto& [m, coeff] : s.terms()) a(slice->row_of.at(m), col) = coeff;
        }
        slice->solver = BlockSolver(a, slice->basis.size());
        if (!slice->solver.block_unique())
            throw InternalError("Schur transition matrix is singular in degree " + std::to_string(d));
        return std::shared_ptr<const SchurSlice>(std::move(slice));
    });
    return *ptr;
}

/// Maps a polynomial in a single c-family onto the C family; rejects anything else.
inline CPolynomial single_c_family(const CPolynomial& p, const char* context) {
    bool has_c = false, has_prime = false;
    for (const auto& g : generators_used(p)) {
        if (g.family == Family::C) has_c = true;
        else if (g.family == Family::CPrime) has_prime = true;
        else throw PreconditionError(std::string(context) + ": input must be a polynomial in Chern classes only");
    }
    if (has_c && has_prime) throw PreconditionError(std::string(context) + ": input mixes c and c' generators");
    return has_prime ? rename_family(p, Family::CPrime, Family::C) : p;
}

} // namespace detail

/// The unique expansion of p over {s_lambda : |lambda| = deg p, length(lambda) <= bound}.
inline SchurExpansion to_schur(const CPolynomial& input, std::optional<int> length_bound = {}) {
    const CPolynomial p = detail::single_c_family(input, "to_schur");
    const auto degree = homogeneous_degree(p, "to_schur");
    if (!degree) return SchurExpansion();
    if (length_bound && *length_bound < 0) throw PreconditionError("to_schur: negative length bound");
    const auto& slice = detail::schur_slice(*degree, length_bound);
    std::vector<Rational> b(slice.row_of.size());
    for (const auto& [m, coeff] : p.terms()) {
        auto it = slice.row_of.find(m);
        if (it == slice.row_of.end())
            throw PreconditionError("to_schur: monomial " + m.to_string() + " is not expressible with length bound " +
                                    std::to_string(*length_bound));
        b[it->second] = coeff;
    }
    const auto coords = slice.solver.coordinates(b);
    SchurExpansion out(*degree);
    for (std::size_t j = 0; j < coords.size(); ++j) out.add(slice.basis[j], to_integer(coords[j], "to_schur"));
    return out;
}

/// Littlewood-Richardson product s_lambda * s_mu, by expanding the product of determinants.
inline SchurExpansion lr_multiply(const Partition& lambda, const Partition& mu) {
    SchurExpansion out = to_schur(schur_dual_jt(lambda) * schur_dual_jt(mu));
    if (out.is_zero()) return SchurExpansion(lambda.weight() + mu.weight());
    return out;
}

inline constexpr int kDefaultOracleBound = 8;

/// Independent route to s_lambda * s_mu: tableau sums in N = |lambda| + |mu| variables,
/// multiplied out and peeled by leading monomials.
inline SchurExpansion lr_oracle(const Partition& lambda, const Partition& mu, int bound = kDefaultOracleBound) {
    const int n = lambda.weight() + mu.weight();
    if (n > bound)
        throw PreconditionError("lr_oracle: |lambda| + |mu| = " + std::to_string(n) + " exceeds bound " +
                                std::to_string(bound));
    const int vars = std::max(n, 1);
    SchurExpansion out = peel_schur(schur_polynomial(lambda, vars) * schur_polynomial(mu, vars), vars);
    return out.is_zero() ? SchurExpansion(n) : out;
}

/// Chern class c_i(E - F), the degree-i part of c(E) / c(F).
inline CPolynomial difference_chern(int i, const BundleSymbol& e, const BundleSymbol& f) {
    detail::require_distinct(e, f);
    CPolynomial out;
    for (int j = 0; j <= i; ++j) {
        CPolynomial t = restrict_to(c(i - j, e.family), e) * complete_from_elementary(j, f);
        out += j % 2 ? -t : t;
    }
    return out;
}

/// Orders (alpha, beta) pairs by the global partition order on alpha, then on beta.
struct PairOrder {
    bool operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const {
        GlobalOrder o;
        if (o(a.first, b.first)) return true;
        if (o(b.first, a.first)) return false;
        return o(a.second, b.second);
    }
};

using BiSchurExpansion = std::map<std::pair<Partition, Partition>, Integer, PairOrder>;

/// s_beta(F*) = (-1)^{|beta|} s_beta(F), written in F's generators.
inline CPolynomial schur_of_dual(const Partition& beta, const BundleSymbol& f) {
    CPolynomial s = restrict_to(rename_family(schur_dual_jt(beta), Family::C, f.family), f);
    return beta.weight() % 2 ? -s : s;
}

/// Coefficients b_{alpha,beta} of p = sum b_{alpha,beta} s_alpha(E) s_beta(F*).
inline BiSchurExpansion bischur_expand(const CPolynomial& p, const BundleSymbol& e, const BundleSymbol& f) {
    detail::require_distinct(e, f);
    std::map<std::pair<int, int>, CPolynomial> components;
    for (const auto& [m, coeff] : p.terms()) {
        int de = 0, df = 0;
        for (const auto& [g, x] : m.factors()) {
            if (g.family == e.family) de += g.degree() * x;
            else if (g.family == f.family) df += g.degree() * x;
            else throw PreconditionError("bischur_expand: generator " + g.to_string() + " belongs to neither bundle");
        }
        components[{de, df}].add_term(m, coeff);
    }
    BiSchurExpansion out;
    for (const auto& [bideg, part] : components) {
        std::vector<std::pair<Partition, Partition>> labels;
        std::vector<CPolynomial> columns;
        for (const auto& alpha : enumerate_partitions(bideg.first, std::nullopt, e.rank))
            for (const auto& beta : enumerate_partitions(bideg.second, std::nullopt, f.rank)) {
                CPolynomial col = restrict_to(rename_family(schur_dual_jt(alpha), Family::C, e.family), e) *
                                  schur_of_dual(beta, f);
                labels.emplace_back(alpha, beta);
                columns.push_back(std::move(col));
            }
        std::map<CMonomial, std::size_t, GrevlexFirst> row_of;
        auto row = [&](const CMonomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
        for (const auto& col : columns)
            for (const auto& [m, coeff] : col.terms()) row(m);
        for (const auto& [m, coeff] : part.terms()) row(m);
        RationalMatrix a(row_of.size(), columns.size());
        std::vector<Rational> b(row_of.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [m, coeff] : columns[j].terms()) a(row_of.at(m), j) = coeff;
        for (const auto& [m, coeff] : part.terms()) b[row_of.at(m)] = coeff;
        const auto x = solve_unique(a, b);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) out.emplace(labels[j], to_integer(x[j], "bischur_expand"));
    }
    return out;
}

/// s_lambda(E - F) = sum b_{alpha,beta} s_alpha(E) s_beta(F*), E in c, F in c'.
inline BiSchurExpansion super_split(const Partition& lambda, std::optional<int> rank_e = {},
                                    std::optional<int> rank_f = {}) {
    const BundleSymbol e{Family::C, rank_e}, f{Family::CPrime, rank_f};
    return bischur_expand(schur_jt(lambda, e, f), e, f);
}

/// The beta = empty slice of a bi-Schur expansion, as an expansion in s_alpha(E).
inline SchurExpansion pure_e_slice(const BiSchurExpansion& b) {
    SchurExpansion out;
    for (const auto& [key, v] : b)
        if (key.second.empty()) out.add(key.first, v);
    return out;
}

} // namespace schubert
