#pragma once

#include <map>
#include <memory>
#include <vector>

#include "expansion.hpp"
#include "linear_solve.hpp"
#include "matrix.hpp"
#include "memo.hpp"
#include "qtilde.hpp"
#include "schur.hpp"

namespace schubert {

/// H*(LG(n)) presented as Z[c_1..c_n] / (Q~_{i,i}, i = 1..n), with c_i = c_i(R*) and
/// basis Y^mu = Q~_mu(R*) over strict mu inside rho(n). Reduction solves, degree by degree,
///   p = sum a_mu Q~_mu + (element of the ideal slice)
/// exactly; the a_mu are required to be uniquely determined and integral.
class LagrangianRing {
public:
    struct Slice {
        std::vector<StrictPartition> basis;
        std::map<CMonomial, std::size_t, GrevlexFirst> row_of;
        std::size_t ideal_rank = 0;
        BlockSolver solver;
    };

    explicit LagrangianRing(int n) : n_(n), slices_(std::make_shared<MemoCache<int, std::shared_ptr<const Slice>>>()) {
        if (n <= 0) throw PreconditionError("LagrangianRing: need n > 0");
    }

    int n() const noexcept { return n_; }
    int top_degree() const noexcept { return n_ * (n_ + 1) / 2; }
    StrictPartition point_class() const { return staircase(n_); }

    std::vector<StrictPartition> basis(int d) const { return enumerate_strict_partitions(d, n_); }

    /// Q~_{i,i} with c_k = 0 for k > n.
    CPolynomial ideal_generator(int i) const { return truncate_rank(qtilde(Partition{i, i}), Family::C, n_); }

    std::size_t monomial_count(int d) const { return enumerate_partitions(d, n_, std::nullopt).size(); }
    std::size_t ideal_rank(int d) const { return slice(d).ideal_rank; }
    bool basis_unique(int d) const { return slice(d).solver.block_unique(); }

    /// Generators c_k with k > n are set to zero (R has rank n).
    QExpansion reduce(const CPolynomial& input) const {
        for (const auto& g : generators_used(input))
            if (g.family != Family::C) throw PreconditionError("lg_reduce: generator " + g.to_string() + " is not a c_i");
        const CPolynomial p = truncate_rank(input, Family::C, n_);
        const auto d = homogeneous_degree(input, "lg_reduce");
        if (d && *d > top_degree())
            throw PreconditionError("lg_reduce: degree " + std::to_string(*d) + " exceeds top degree " +
                                    std::to_string(top_degree()));
        if (p.is_zero()) return QExpansion(d.value_or(0));
        const Slice& s = slice(*d);
        std::vector<Rational> b(s.row_of.size());
        for (const auto& [m, coeff] : p.terms()) b[s.row_of.at(m)] = coeff;
        if (!s.solver.block_unique())
            throw NonUniqueSolution("lg_reduce: basis coordinates not determined in degree " + std::to_string(*d));
        const auto coords = s.solver.coordinates(b);
        QExpansion out(*d);
        for (std::size_t j = 0; j < coords.size(); ++j) out.add(s.basis[j], to_integer(coords[j], "lg_reduce"));
        return out;
    }

    Integer integrate(const QExpansion& x) const {
        if (x.is_zero()) return 0;
        if (x.degree() != top_degree())
            throw PreconditionError("lg_integrate: class has degree " + std::to_string(x.degree()) +
                                    ", expected top degree " + std::to_string(top_degree()));
        return x.coefficient(point_class());
    }

    StrictPartition dual(const StrictPartition& mu) const { return strict_complement(mu, n_); }

    /// Pullback of the Schubert class X^lambda of G_n(C^{2n}) to LG(n); zero above the top degree.
    QExpansion restrict(const Partition& lambda) const {
        if (static_cast<int>(lambda.length()) > n_ || lambda[0] > n_)
            throw PreconditionError("lg_restrict: " + lambda.to_string() + " not inside the " + std::to_string(n_) +
                                    "x" + std::to_string(n_) + " square");
        if (lambda.weight() > top_degree()) return QExpansion(lambda.weight());
        return reduce(schur_dual_jt(lambda));
    }

    IntegerMatrix pairing(int d) const {
        const auto rows = basis(d), cols = basis(top_degree() - d);
        IntegerMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m(i, j) = integrate(reduce(qtilde(rows[i]) * qtilde(cols[j])));
        return m;
    }

    const Slice& slice(int d) const {
        return *slices_->get(d, [&] { return build_slice(d); });
    }

private:
    std::shared_ptr<const Slice> build_slice(int d) const {
        auto s = std::make_shared<Slice>();
        s->basis = basis(d);
        const auto monomials = enumerate_partitions(d, n_, std::nullopt);
        for (std::size_t r = 0; r < monomials.size(); ++r) s->row_of.emplace(CMonomial::from_partition(monomials[r]), r);

        std::vector<CPolynomial> columns;
        for (const auto& mu : s->basis) columns.push_back(truncate_rank(qtilde(mu), Family::C, n_));
        const std::size_t block = columns.size();
        for (int i = 1; i <= n_ && 2 * i <= d; ++i) {
            const CPolynomial g = ideal_generator(i);
            for (const auto& nu : enumerate_partitions(d - 2 * i, n_, std::nullopt))
                columns.push_back(CPolynomial::term(CMonomial::from_partition(nu)) * g);
        }
        RationalMatrix a(monomials.size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [m, coeff] : columns[j].terms()) a(s->row_of.at(m), j) = coeff;

        RationalMatrix ideal(monomials.size(), columns.size() - block);
        for (std::size_t i = 0; i < monomials.size(); ++i)
            for (std::size_t j = block; j < columns.size(); ++j) ideal(i, j - block) = a(i, j);
        s->ideal_rank = schubert::rank(ideal);
        s->solver = BlockSolver(a, block);
        return s;
    }

    int n_;
    std::shared_ptr<MemoCache<int, std::shared_ptr<const Slice>>> slices_;
};

/// Shared ring instances so repeated reductions reuse their degree slices.
inline const LagrangianRing& lagrangian_ring(int n) {
    static MemoCache<int, LagrangianRing> rings;
    return rings.get(n, [n] { return LagrangianRing(n); });
}

/// Expansion of p over the Q~ basis modulo the LG(n) relations.
inline QExpansion qtilde_expand(const CPolynomial& p, int n) { return lagrangian_ring(n).reduce(p); }

} // namespace schubert
