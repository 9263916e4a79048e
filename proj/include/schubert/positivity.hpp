#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "expression.hpp"
#include "lagrangian.hpp"
#include "schur.hpp"
#include "symmetric_polynomial.hpp"

namespace schubert {

enum class Verdict { Positive, Zero, NotNonnegative };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Positive: return "POSITIVE";
        case Verdict::Zero: return "ZERO";
        case Verdict::NotNonnegative: return "NOT_NONNEGATIVE";
    }
    return "?";
}

template <class Key>
struct PositivityReport {
    std::string name;
    CPolynomial input;
    BasisExpansion<Key> expansion;
    Verdict verdict = Verdict::Zero;
    std::vector<std::pair<Key, Integer>> witnesses;  // negative coefficients, in basis order
};

using SchurReport = PositivityReport<Partition>;
using QReport = PositivityReport<StrictPartition>;

/// Positive iff nonzero with all coefficients nonnegative.
template <class Key>
PositivityReport<Key> judge(std::string name, CPolynomial input, BasisExpansion<Key> expansion) {
    PositivityReport<Key> r{std::move(name), std::move(input), std::move(expansion), Verdict::Zero, {}};
    for (const auto& [k, v] : r.expansion.coefficients())
        if (v < 0) r.witnesses.emplace_back(k, v);
    if (!r.witnesses.empty()) r.verdict = Verdict::NotNonnegative;
    else if (!r.expansion.is_zero()) r.verdict = Verdict::Positive;
    return r;
}

inline SchurReport certify(const CPolynomial& p, std::optional<int> length_bound = {}, std::string name = {}) {
    return judge(std::move(name), p, to_schur(p, length_bound));
}

/// Certifies every entry of the classical table.
inline std::vector<SchurReport> verify_thom_table() {
    std::vector<SchurReport> out;
    for (const auto& entry : kClassicalThomTable)
        out.push_back(certify(parse_polynomial(entry.polynomial), std::nullopt, std::string(entry.name)));
    return out;
}

/// Reduces each printed Lagrangian Thom polynomial in LG(rank) and certifies the Q~ expansion.
inline std::vector<QReport> verify_lagrangian_table(int rank = kLegendrianTableRank) {
    std::vector<QReport> out;
    const auto& ring = lagrangian_ring(rank);
    for (const auto& entry : kLegendrianThomTable) {
        CPolynomial p = parse_polynomial(entry.lagrangian);
        QExpansion x = ring.reduce(p);
        out.push_back(judge(std::string(entry.name), std::move(p), std::move(x)));
    }
    return out;
}

struct SchurBundleBounds {
    int max_roots = 20;
    int max_class_weight = 4;
};

/// s_mu(S^lambda E) for E of rank n, in the Schur basis s_nu(E). The Chern roots of S^lambda E
/// are the tableau weights of shape lambda with entries in 1..n.
inline SchurExpansion schur_bundle_class(const Partition& lambda, const Partition& mu, int n,
                                         SchurBundleBounds bounds = {}) {
    if (n < 1) throw PreconditionError("schur_bundle_class: rank must be positive");
    if (mu.weight() > bounds.max_class_weight)
        throw PreconditionError("schur_bundle_class: |mu| = " + std::to_string(mu.weight()) + " exceeds work bound " +
                                std::to_string(bounds.max_class_weight));
    const auto tableaux = enumerate_ssyt(lambda, n);
    if (static_cast<int>(tableaux.size()) > bounds.max_roots)
        throw PreconditionError("schur_bundle_class: " + std::to_string(tableaux.size()) +
                                " Chern roots exceed work bound " + std::to_string(bounds.max_roots));
    std::vector<XPolynomial> roots;
    for (const auto& t : tableaux) {
        const auto w = t.content(n);
        XPolynomial root;
        for (int i = 0; i < n; ++i) root += Integer(w[static_cast<std::size_t>(i)]) * x_var(i + 1);
        roots.push_back(std::move(root));
    }
    const auto e = elementary_of(roots);
    const XPolynomial s = evaluate<XPolynomial>(schur_dual_jt(mu), [&](const Generator& g) {
        return static_cast<std::size_t>(g.index) < e.size() ? e[static_cast<std::size_t>(g.index)] : XPolynomial();
    });
    SchurExpansion out = peel_schur(s, n);
    return out.is_zero() ? SchurExpansion(mu.weight()) : out;
}

} // namespace schubert
