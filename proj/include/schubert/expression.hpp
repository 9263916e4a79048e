#pragma once

// Grammar (whitespace is insignificant, there is no unary minus and no implicit product):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' NAT)?
//   atom   := NAT | GEN | BASIS | '(' expr ')'
//   GEN    := 'c' NAT | "c'" NAT | 'v1' | 'v2'
//   BASIS  := ('s' | 'q') '[' NAT (',' NAT)* ']'   s: weakly, q: strictly decreasing

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cpolynomial.hpp"
#include "partition.hpp"
#include "qtilde.hpp"
#include "schur.hpp"

namespace schubert {

struct Expr {
    enum class Kind { Number, Generator, Basis, Group, Power, Product, Sum };

    Kind kind = Kind::Number;
    Integer number;              // Number
    Generator generator;         // Generator
    char basis = 0;              // Basis: 's' or 'q'
    std::vector<int> parts;      // Basis
    unsigned exponent = 0;       // Power
    std::vector<Expr> children;  // Group (1), Power (1), Product (>= 2), Sum (>= 2)
    std::vector<char> ops;       // Sum: ops[k] joins children[k] and children[k + 1]

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.kind == b.kind && a.number == b.number && a.generator == b.generator && a.basis == b.basis &&
               a.parts == b.parts && a.exponent == b.exponent && a.children == b.children && a.ops == b.ops;
    }
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    void expect(char ch) {
        if (!peek(ch)) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    std::string nat_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_nat() {
        const std::size_t start = pos_;
        const std::string digits = nat_digits();
        if (digits.size() > 6) {
            pos_ = start;
            fail("number too large here");
        }
        return std::stoi(digits);
    }

    Expr expr() {
        Expr first = term();
        if (!peek('+') && !peek('-')) return first;
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.children.push_back(std::move(first));
        while (peek('+') || peek('-')) {
            sum.ops.push_back(text_[pos_++]);
            sum.children.push_back(term());
        }
        return sum;
    }

    Expr term() {
        Expr first = factor();
        if (!peek('*')) return first;
        Expr prod;
        prod.kind = Expr::Kind::Product;
        prod.children.push_back(std::move(first));
        while (peek('*')) {
            ++pos_;
            prod.children.push_back(factor());
        }
        return prod;
    }

    Expr factor() {
        Expr base = atom();
        if (!peek('^')) return base;
        ++pos_;
        Expr p;
        p.kind = Expr::Kind::Power;
        p.exponent = static_cast<unsigned>(small_nat());
        p.children.push_back(std::move(base));
        return p;
    }

    Expr atom() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        Expr e;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            e.kind = Expr::Kind::Number;
            e.number = Integer(nat_digits());
            return e;
        }
        if (ch == '(') {
            ++pos_;
            e.kind = Expr::Kind::Group;
            e.children.push_back(expr());
            expect(')');
            return e;
        }
        if (ch == 'c') {
            ++pos_;
            Family f = Family::C;
            if (peek('\'')) {
                ++pos_;
                f = Family::CPrime;
            }
            const std::size_t at = pos_;
            const int index = small_nat();
            if (index == 0) {
                pos_ = at;
                fail("Chern generator index must be positive");
            }
            e.kind = Expr::Kind::Generator;
            e.generator = Generator{f, index};
            return e;
        }
        if (ch == 'v') {
            ++pos_;
            const std::size_t at = pos_;
            const int index = small_nat();
            if (index != 1 && index != 2) {
                pos_ = at;
                fail("only v1 and v2 exist");
            }
            e.kind = Expr::Kind::Generator;
            e.generator = index == 1 ? v1() : v2();
            return e;
        }
        if (ch == 's' || ch == 'q') {
            ++pos_;
            e.kind = Expr::Kind::Basis;
            e.basis = ch;
            expect('[');
            while (true) {
                const std::size_t at = pos_;
                const int part = small_nat();
                if (part == 0) {
                    pos_ = at;
                    fail("basis index parts must be positive");
                }
                if (!e.parts.empty() && (part > e.parts.back() || (ch == 'q' && part == e.parts.back()))) {
                    pos_ = at;
                    fail(ch == 's' ? "s[...] indices must be weakly decreasing" : "q[...] indices must be strictly decreasing");
                }
                e.parts.push_back(part);
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                break;
            }
            expect(']');
            return e;
        }
        fail("expected a number, generator, basis element or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Expr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string to_string(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number.get_str();
        case Expr::Kind::Generator: return e.generator.to_string();
        case Expr::Kind::Basis: {
            std::string s(1, e.basis);
            s += '[';
            for (std::size_t i = 0; i < e.parts.size(); ++i) s += (i ? "," : "") + std::to_string(e.parts[i]);
            return s + ']';
        }
        case Expr::Kind::Group: return "(" + to_string(e.children[0]) + ")";
        case Expr::Kind::Power: return to_string(e.children[0]) + "^" + std::to_string(e.exponent);
        case Expr::Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "*" : "") + to_string(e.children[i]);
            return s;
        }
        case Expr::Kind::Sum: {
            std::string s = to_string(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i)
                s += std::string(" ") + e.ops[i - 1] + " " + to_string(e.children[i]);
            return s;
        }
    }
    return {};
}

/// Evaluates an expression to a c-polynomial; s[..] and q[..] expand to their determinants/recurrences.
inline CPolynomial evaluate(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return CPolynomial(e.number);
        case Expr::Kind::Generator: return gen(e.generator);
        case Expr::Kind::Basis:
            return e.basis == 's' ? schur_dual_jt(Partition(e.parts)) : qtilde(StrictPartition(e.parts));
        case Expr::Kind::Group: return evaluate(e.children[0]);
        case Expr::Kind::Power: return power(evaluate(e.children[0]), e.exponent);
        case Expr::Kind::Product: {
            CPolynomial p = evaluate(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i) p *= evaluate(e.children[i]);
            return p;
        }
        case Expr::Kind::Sum: {
            CPolynomial p = evaluate(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                if (e.ops[i - 1] == '+') p += evaluate(e.children[i]);
                else p -= evaluate(e.children[i]);
            }
            return p;
        }
    }
    return {};
}

inline CPolynomial parse_polynomial(std::string_view text) { return evaluate(parse_expression(text)); }

} // namespace schubert
