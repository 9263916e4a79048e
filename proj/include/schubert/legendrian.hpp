#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "expansion.hpp"
#include "expression.hpp"
#include "positivity.hpp"

namespace schubert {

/// Label of the basis class Q~_mu v1^a v2^b.
struct LegendrianKey {
    StrictPartition mu;
    int a = 0;
    int b = 0;

    int degree() const noexcept { return mu.weight() + a + b; }
    friend bool operator==(const LegendrianKey&, const LegendrianKey&) = default;
};

/// Lower total v-degree first, then mu in the global order, then larger v1 power first.
struct LegendrianOrder {
    bool operator()(const LegendrianKey& x, const LegendrianKey& y) const {
        if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
        GlobalOrder o;
        if (o(x.mu, y.mu)) return true;
        if (o(y.mu, x.mu)) return false;
        return std::tie(y.a, y.b) < std::tie(x.a, x.b);
    }
};

inline std::string to_string(const LegendrianKey& k) {
    std::string s;
    auto factor = [&](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
    if (k.a) factor(k.a == 1 ? "v1" : "v1^" + std::to_string(k.a));
    if (k.b) factor(k.b == 1 ? "v2" : "v2^" + std::to_string(k.b));
    if (!k.mu.empty()) factor("q" + k.mu.to_string());
    return s;
}

/// A homogeneous Legendrian characteristic class in the basis Q~_mu v1^a v2^b, mu inside rho(n), a, b <= n.
class LegendrianClass {
public:
    using Map = std::map<LegendrianKey, Integer, LegendrianOrder>;

    explicit LegendrianClass(int n) : n_(n) {
        if (n < 1) throw PreconditionError("LegendrianClass: rank must be positive");
    }

    int n() const noexcept { return n_; }
    std::optional<int> degree() const noexcept { return degree_; }
    const Map& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Integer coefficient(const LegendrianKey& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    void add(const LegendrianKey& k, const Integer& value) {
        if (value == 0) return;
        if (!in_staircase(k.mu, n_))
            throw PreconditionError("LegendrianClass: q" + k.mu.to_string() + " is not inside rho(" +
                                    std::to_string(n_) + ")");
        if (k.a < 0 || k.b < 0 || k.a > n_ || k.b > n_)
            throw PreconditionError("LegendrianClass: v-exponents must lie in 0.." + std::to_string(n_));
        if (degree_ && *degree_ != k.degree())
            throw PreconditionError("LegendrianClass: inhomogeneous, degrees " + std::to_string(*degree_) + " and " +
                                    std::to_string(k.degree()));
        degree_ = k.degree();
        auto [it, inserted] = coeffs_.try_emplace(k, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coeffs_.erase(it);
        }
        if (coeffs_.empty()) degree_.reset();
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, v] : coeffs_) {
            const Integer mag = abs(v);
            if (first) {
                if (v < 0) s += '-';
            } else {
                s += v < 0 ? " - " : " + ";
            }
            first = false;
            const std::string label = schubert::to_string(k);
            if (label.empty()) s += mag.get_str();
            else s += (mag != 1 ? mag.get_str() + "*" : "") + label;
        }
        return s;
    }

    friend bool operator==(const LegendrianClass& x, const LegendrianClass& y) {
        return x.n_ == y.n_ && x.coeffs_ == y.coeffs_;
    }

private:
    int n_;
    std::optional<int> degree_;
    Map coeffs_;
};

namespace detail {

// Intermediate value: (mu parts, a, b) -> coefficient; at most one Q~ factor per term.
using LegendrianTerms = std::map<std::tuple<std::vector<int>, int, int>, Integer>;

inline void add_to(LegendrianTerms& t, const std::tuple<std::vector<int>, int, int>& k, const Integer& v) {
    if (v == 0) return;
    auto [it, inserted] = t.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

inline LegendrianTerms multiply(const LegendrianTerms& x, const LegendrianTerms& y) {
    LegendrianTerms out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            const auto& [mx, ax, bx] = kx;
            const auto& [my, ay, by] = ky;
            if (!mx.empty() && !my.empty())
                throw PreconditionError("legendrian_parse: products of two q[...] classes are not defined");
            add_to(out, {mx.empty() ? my : mx, ax + ay, bx + by}, vx * vy);
        }
    return out;
}

inline LegendrianTerms legendrian_terms(const Expr& e) {
    LegendrianTerms out;
    switch (e.kind) {
        case Expr::Kind::Number: add_to(out, {{}, 0, 0}, e.number); break;
        case Expr::Kind::Generator:
            if (e.generator.family == Family::V1) add_to(out, {{}, 1, 0}, 1);
            else if (e.generator.family == Family::V2) add_to(out, {{}, 0, 1}, 1);
            else throw PreconditionError("legendrian_parse: " + e.generator.to_string() + " is not allowed, use q[...], v1, v2");
            break;
        case Expr::Kind::Basis:
            if (e.basis != 'q') throw PreconditionError("legendrian_parse: s[...] is not allowed, use q[...]");
            add_to(out, {e.parts, 0, 0}, 1);
            break;
        case Expr::Kind::Group: return legendrian_terms(e.children[0]);
        case Expr::Kind::Power: {
            const LegendrianTerms base = legendrian_terms(e.children[0]);
            add_to(out, {{}, 0, 0}, 1);
            for (unsigned k = 0; k < e.exponent; ++k) out = multiply(out, base);
            break;
        }
        case Expr::Kind::Product: {
            out = legendrian_terms(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i) out = multiply(out, legendrian_terms(e.children[i]));
            break;
        }
        case Expr::Kind::Sum: {
            out = legendrian_terms(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i)
                for (const auto& [k, v] : legendrian_terms(e.children[i])) add_to(out, k, e.ops[i - 1] == '+' ? v : Integer(-v));
            break;
        }
    }
    return out;
}

} // namespace detail

/// Parses a Legendrian class written over q[...] labels and v1, v2. Labels are taken as basis labels as is.
inline LegendrianClass legendrian_parse(std::string_view text, int n) {
    const Expr e = parse_expression(text);
    LegendrianClass out(n);
    for (const auto& [k, v] : detail::legendrian_terms(e)) {
        const auto& [mu, a, b] = k;
        out.add(LegendrianKey{StrictPartition(mu), a, b}, v);
    }
    return out;
}

/// The v1 = v2 = 0 slice.
inline QExpansion lagrangian_part(const LegendrianClass& x) {
    QExpansion out;
    for (const auto& [k, v] : x.coefficients())
        if (k.a == 0 && k.b == 0) out.add(k.mu, v);
    return out;
}

struct LegendrianReport {
    std::string name;
    LegendrianClass expansion;
    Verdict verdict = Verdict::Zero;
    std::vector<std::pair<LegendrianKey, Integer>> witnesses;
};

inline LegendrianReport legendrian_positivity(const LegendrianClass& x, std::string name = {}) {
    LegendrianReport r{std::move(name), x, Verdict::Zero, {}};
    for (const auto& [k, v] : x.coefficients())
        if (v < 0) r.witnesses.emplace_back(k, v);
    if (!r.witnesses.empty()) r.verdict = Verdict::NotNonnegative;
    else if (!x.is_zero()) r.verdict = Verdict::Positive;
    return r;
}

inline std::vector<LegendrianReport> verify_legendrian_table() {
    std::vector<LegendrianReport> out;
    for (const auto& entry : kLegendrianThomTable)
        out.push_back(legendrian_positivity(legendrian_parse(entry.expression, kLegendrianTableRank),
                                            std::string(entry.name)));
    return out;
}

} // namespace schubert
