#pragma once

#include <vector>

#include "expansion.hpp"
#include "matrix.hpp"
#include "schur.hpp"

namespace schubert {

/// H*(Gr(r, n)) presented as Z[c_1..c_r] / (h_{n-r+1}, ..., h_n), with c_i = c_i(R*) and
/// Schubert basis X^lambda = s_lambda(R*) for lambda inside the r x (n-r) rectangle.
/// Since h_k lies in the ideal for every k > n - r, any s_lambda with lambda_1 > n - r
/// vanishes (the first Jacobi-Trudi row does), which is what reduce() relies on.
class GrassmannianRing {
public:
    GrassmannianRing(int r, int n) : r_(r), n_(n) {
        if (r <= 0 || n <= r) throw PreconditionError("GrassmannianRing: need 0 < r < n");
    }

    int r() const noexcept { return r_; }
    int n() const noexcept { return n_; }
    int top_degree() const noexcept { return r_ * (n_ - r_); }
    Partition rectangle() const { return schubert::rectangle(r_, n_ - r_); }

    std::vector<Partition> basis(int d) const { return enumerate_partitions(d, n_ - r_, r_); }

    bool contains(const Partition& lambda) const { return in_rectangle(lambda, r_, n_); }

    SchurExpansion truncate(const SchurExpansion& x) const {
        SchurExpansion out(x.degree());
        for (const auto& [lambda, a] : x.coefficients())
            if (contains(lambda)) out.add(lambda, a);
        return out;
    }

    SchurExpansion reduce(const CPolynomial& p) const {
        for (const auto& g : generators_used(p))
            if (g.family != Family::C || g.index > r_)
                throw PreconditionError("gr_reduce: generator " + g.to_string() + " outside c1..c" + std::to_string(r_));
        const auto d = homogeneous_degree(p, "gr_reduce");
        if (d && *d > top_degree())
            throw PreconditionError("gr_reduce: degree " + std::to_string(*d) + " exceeds top degree " +
                                    std::to_string(top_degree()));
        return truncate(to_schur(p, r_));
    }

    /// Product of two classes in the Schubert basis (Littlewood-Richardson, then truncation).
    SchurExpansion multiply(const SchurExpansion& x, const SchurExpansion& y) const {
        SchurExpansion out(x.degree() + y.degree());
        for (const auto& [a, ca] : x.coefficients())
            for (const auto& [b, cb] : y.coefficients()) {
                const SchurExpansion product = lr_multiply(a, b);
                for (const auto& [nu, cn] : product.coefficients())
                    if (contains(nu)) out.add(nu, ca * cb * cn);
            }
        return out;
    }

    /// Degree of a top-degree class: its coefficient on the point class.
    Integer integrate(const SchurExpansion& x) const {
        if (x.is_zero()) return 0;
        if (x.degree() != top_degree())
            throw PreconditionError("gr_integrate: class has degree " + std::to_string(x.degree()) +
                                    ", expected top degree " + std::to_string(top_degree()));
        return x.coefficient(rectangle());
    }

    Partition dual(const Partition& lambda) const { return rectangle_dual(lambda, r_, n_); }

    /// Intersection numbers of basis(d) against basis(top - d).
    IntegerMatrix pairing(int d) const {
        const auto rows = basis(d), cols = basis(top_degree() - d);
        IntegerMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m(i, j) = integrate(multiply(single(rows[i]), single(cols[j])));
        return m;
    }

private:
    static SchurExpansion single(const Partition& lambda) {
        SchurExpansion x(lambda.weight());
        x.add(lambda, 1);
        return x;
    }

    int r_, n_;
};

} // namespace schubert
