#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schubert {

namespace detail {

class PartsBase {
public:
    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 0-based part access; parts beyond the length read as 0.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

protected:
    PartsBase() = default;
    explicit PartsBase(std::vector<int> parts) : parts_(std::move(parts)) {}

    std::vector<int> parts_;
};

inline std::vector<int> strip_zeros(std::vector<int> parts, const char* what) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int p : parts)
        if (p <= 0) throw PreconditionError(std::string(what) + ": parts must be positive");
    return parts;
}

} // namespace detail

/// Weakly decreasing sequence of positive integers. Trailing zeros are stripped.
class Partition : public detail::PartsBase {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts)
        : PartsBase(detail::strip_zeros(std::move(parts), "partition")) {
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{}))
            throw PreconditionError("partition parts must be weakly decreasing: " + to_string());
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
};

/// Strictly decreasing sequence of positive integers.
class StrictPartition : public detail::PartsBase {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(std::vector<int> parts)
        : PartsBase(detail::strip_zeros(std::move(parts), "strict partition")) {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] <= parts_[i])
                throw PreconditionError("strict partition parts must be strictly decreasing: " +
                                        to_string());
    }

    Partition as_partition() const { return Partition(parts_); }

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }
};

/// The fixed global order used for every matrix column and serialization:
/// weight ascending, then reverse lexicographic, so (3) < (2,1) < (1,1,1).
struct GlobalOrder {
    template <class P>
    bool operator()(const P& a, const P& b) const {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

/// Does `inner` fit inside `outer` as Young diagrams?
inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

inline Partition rectangle(int rows, int cols) {
    if (rows <= 0 || cols <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

/// rho(n) = (n, n-1, ..., 1).
inline StrictPartition staircase(int n) {
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    return StrictPartition(std::move(parts));
}

inline bool in_rectangle(const Partition& lambda, int r, int n) {
    return static_cast<int>(lambda.length()) <= r && lambda[0] <= n - r;
}

/// Complement of lambda in the r x (n-r) rectangle, rotated:
/// lambda'_i = n - r - lambda_{r+1-i}.
inline Partition rectangle_dual(const Partition& lambda, int r, int n) {
    if (r < 0 || n < r) throw PreconditionError("rectangle_dual: need 0 <= r <= n");
    if (!in_rectangle(lambda, r, n))
        throw PreconditionError("rectangle_dual: " + lambda.to_string() + " not inside " +
                                std::to_string(r) + "x" + std::to_string(n - r) + " rectangle");
    std::vector<int> out(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) out[i] = n - r - lambda[static_cast<std::size_t>(r - 1 - i)];
    return Partition(std::move(out));
}

inline bool in_staircase(const StrictPartition& mu, int n) { return mu.empty() || mu[0] <= n; }

/// Parts of the result are {1..n} minus the parts of mu.
inline StrictPartition strict_complement(const StrictPartition& mu, int n) {
    if (!in_staircase(mu, n))
        throw PreconditionError("strict_complement: " + mu.to_string() + " not inside rho(" +
                                std::to_string(n) + ")");
    std::vector<int> out;
    for (int k = n; k >= 1; --k)
        if (std::find(mu.begin(), mu.end(), k) == mu.end()) out.push_back(k);
    return StrictPartition(std::move(out));
}

/// True iff lambda fits the (n,m)-hook: lambda_{n+1} <= m.
inline bool hook_contains(const Partition& lambda, int n, int m) {
    return lambda[static_cast<std::size_t>(n)] <= m;
}

/// All partitions of d within the bounds, in reverse lexicographic order.
inline std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_part = {},
                                                   std::optional<int> max_length = {}) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    const int length_cap = max_length.value_or(d);
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= length_cap) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, max_part.value_or(d));
    return out;
}

/// Strict partitions of d with parts <= max_part, in reverse lexicographic order.
inline std::vector<StrictPartition> enumerate_strict_partitions(int d, int max_part) {
    std::vector<StrictPartition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p - 1);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

struct SemistandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Multiplicity of each entry 1..n, i.e. the weight of the tableau as an exponent vector.
    std::vector<int> content(int n) const {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (const auto& row : rows)
            for (int e : row) ++c[static_cast<std::size_t>(e - 1)];
        return c;
    }

    bool is_semistandard(int n) const {
        if (rows.size() != shape.length()) return false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape[i]) return false;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const int e = rows[i][j];
                if (e < 1 || e > n) return false;
                if (j > 0 && rows[i][j - 1] > e) return false;
                if (i > 0 && rows[i - 1][j] >= e) return false;
            }
        }
        return true;
    }

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
};

/// All semistandard tableaux of the given shape with entries in 1..n, filled row by row.
inline std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int n) {
    std::vector<SemistandardTableau> out;
    SemistandardTableau t{shape, {}};
    for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
    const std::size_t rows = shape.length();
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == rows) {
            out.push_back(t);
            return;
        }
        if (j == t.rows[i].size()) {
            fill(i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);
        for (int e = lo; e <= n; ++e) {
            t.rows[i][j] = e;
            fill(i, j + 1);
        }
    };
    fill(0, 0);
    return out;
}

/// Parses "3,1", "[3,1]", "" or "[]" into a part list (validation is left to the caller's type).
inline std::vector<int> parse_part_list(std::string text) {
    std::erase_if(text, [](char ch) { return ch == ' ' || ch == '\t'; });
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw PreconditionError("unbalanced bracket in partition '" + text + "'");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw PreconditionError("malformed partition '" + text + "'");
        parts.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace schubert
