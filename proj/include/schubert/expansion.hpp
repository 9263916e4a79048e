#pragma once

#include <map>
#include <string>

#include "integer.hpp"
#include "partition.hpp"

namespace schubert {

template <class Key>
struct basis_symbol;
template <>
struct basis_symbol<Partition> {
    static constexpr char value = 's';
};
template <>
struct basis_symbol<StrictPartition> {
    static constexpr char value = 'q';
};

/// A homogeneous class written in a basis indexed by (strict) partitions. Entries are kept
/// in the global partition order; zero coefficients are never stored.
template <class Key>
class BasisExpansion {
public:
    using Map = std::map<Key, Integer, GlobalOrder>;

    explicit BasisExpansion(int degree = 0) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    const Map& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Integer coefficient(const Key& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    void add(const Key& k, const Integer& value) {
        if (value == 0) return;
        if (k.weight() != degree_) {
            if (!coeffs_.empty())
                throw PreconditionError("expansion: mixing degrees " + std::to_string(degree_) + " and " +
                                        std::to_string(k.weight()));
            degree_ = k.weight();
        }
        auto [it, inserted] = coeffs_.try_emplace(k, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& [k, v] : coeffs_) s += v;
        return s;
    }

    bool all_nonnegative() const {
        for (const auto& [k, v] : coeffs_)
            if (v < 0) return false;
        return true;
    }

    /// Plain text in the expression grammar, e.g. "s[3] + 5*s[2,1] + 6*s[1,1,1]".
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
            if (k.empty()) {
                s += mag.get_str();
                continue;
            }
            if (mag != 1) s += mag.get_str() + "*";
            s += basis_symbol<Key>::value;
            s += k.to_string();
        }
        return s;
    }

    friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
        return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.degree_ == b.degree_);
    }

private:
    Map coeffs_;
    int degree_ = 0;
};

using SchurExpansion = BasisExpansion<Partition>;
using QExpansion = BasisExpansion<StrictPartition>;

} // namespace schubert
