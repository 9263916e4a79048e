#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "expression.hpp"
#include "grassmannian.hpp"
#include "lagrangian.hpp"
#include "legendrian.hpp"
#include "linear_solve.hpp"
#include "positivity.hpp"
#include "qtilde.hpp"
#include "schur.hpp"
#include "serialize.hpp"

namespace schubert::cli {

/// Which subcommand exposes each library operation.
struct Route {
    std::string_view operation;
    std::string_view command;
};

inline constexpr std::array<Route, 32> kRoutes{{
    {"conjugate", "partition conjugate"},
    {"rectangle_dual", "gr dual"},
    {"strict_complement", "lg dual"},
    {"enumerate_partitions", "partition enumerate"},
    {"enumerate_ssyt", "partition ssyt"},
    {"hook_contains", "partition hook"},
    {"poly_arith", "expand"},
    {"solve_exact", "solve"},
    {"specialize", "expand --set"},
    {"complete_from_elementary", "complete"},
    {"supersymmetric_s", "supersymmetric"},
    {"schur_jt", "schur"},
    {"schur_dual_jt", "schur --dual"},
    {"to_schur", "to-schur"},
    {"lr_multiply", "lr"},
    {"lr_oracle", "lr --oracle"},
    {"super_split", "schur --split"},
    {"qtilde", "qtilde"},
    {"qtilde_expand", "qtilde-expand"},
    {"gr_reduce", "gr reduce"},
    {"gr_integrate", "gr integrate"},
    {"gr_pairing", "gr pairing"},
    {"lg_reduce", "lg reduce"},
    {"lg_integrate", "lg integrate"},
    {"lg_restrict", "lg restrict"},
    {"lg_pairing", "lg pairing"},
    {"certify", "certify"},
    {"verify_thom_table", "thom-verify"},
    {"schur_bundle_class", "schur-bundle"},
    {"legendrian_parse", "legendrian"},
    {"lagrangian_part", "legendrian --lagrangian"},
    {"legendrian_positivity", "legendrian"},
}};

namespace detail {

using Json = json::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

inline std::string partition_text(const schubert::detail::PartsBase& p) { return p.to_string(); }

inline std::string matrix_text(const IntegerMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
        s += '\n';
    }
    return s;
}

template <class Report>
std::string report_text(const Report& r) {
    std::string s = r.name + ": " + to_string(r.verdict) + "  " + r.expansion.to_string();
    for (const auto& [k, v] : r.witnesses) {
        if constexpr (std::is_same_v<std::remove_cvref_t<decltype(k)>, LegendrianKey>)
            s += "\n  witness " + schubert::to_string(k) + " " + v.get_str();
        else
            s += "\n  witness " + k.to_string() + " " + v.get_str();
    }
    return s;
}

inline Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        Rational q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw PreconditionError("solve: matrix entries must be integers or \"p/q\" strings");
}

class Session {
public:
    Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Exact Schubert calculus, Schur/Q~ expansions and Thom polynomial positivity", "schubert"};
        configure(app);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(std::move(reversed));
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? kExitOk : kExitUsage;
        }
        try {
            return action_ ? action_() : kExitUsage;
        } catch (const InternalError& e) {
            err_ << "internal error: " << e.what() << '\n';
            return kExitInternal;
        } catch (const std::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

private:
    void emit(const Json& j, const std::string& text) {
        if (pretty_) out_ << text << '\n';
        else out_ << j.dump() << '\n';
    }

    void emit_polynomial(const CPolynomial& p) {
        const auto d = homogeneous_degree(p, "output");
        emit({{"polynomial", to_string(p)}, {"degree", d ? Json(*d) : Json(nullptr)}}, to_string(p));
    }

    template <class Expansion>
    void emit_expansion(const Expansion& x) {
        emit(json::expansion(x), x.to_string());
    }

    std::string expression_text(const std::string& positional) const {
        if (!input_file_.empty()) {
            if (!positional.empty()) throw PreconditionError("give either EXPR or --input FILE, not both");
            std::ifstream in(input_file_);
            if (!in) throw PreconditionError("cannot read " + input_file_);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
            return text;
        }
        if (positional.empty()) throw PreconditionError("missing EXPR (or --input FILE)");
        return positional;
    }

    CPolynomial expression(const std::string& positional) const { return parse_polynomial(expression_text(positional)); }

    // Selects the action of the innermost parsed subcommand.
    void on(CLI::App* sub, std::function<int()> fn) {
        sub->callback([this, fn = std::move(fn)] { action_ = fn; });
    }

    void configure(CLI::App& app) {
        app.fallthrough();
        app.require_subcommand(1);
        auto* json_flag = app.add_flag("--json", "JSON output (default)");
        app.add_flag("--pretty", pretty_, "plain text output")->excludes(json_flag);
        app.add_flag("--seed-order", "accepted for compatibility; all orderings are fixed");
        app.add_option("--input", input_file_, "read EXPR from FILE");

        add_partition(app);
        add_polynomial(app);
        add_schur(app);
        add_rings(app);
        add_positivity(app);
    }

    void add_partition(CLI::App& app) {
        auto* part = app.add_subcommand("partition", "partition combinatorics");
        part->require_subcommand(1);

        auto* conj = part->add_subcommand("conjugate", "transpose of a Young diagram");
        conj->add_option("LAMBDA", lambda_text_)->required();
        on(conj, [this] {
            const Partition c = conjugate(Partition(parse_part_list(lambda_text_)));
            emit(json::parts(c), partition_text(c));
            return kExitOk;
        });

        auto* en = part->add_subcommand("enumerate", "partitions of a weight in reverse lexicographic order");
        en->add_option("--weight", d_)->required()->check(CLI::NonNegativeNumber);
        en->add_option("--max-part", max_part_)->check(CLI::NonNegativeNumber);
        en->add_option("--max-length", max_length_)->check(CLI::NonNegativeNumber);
        on(en, [this] {
            Json j = Json::array();
            std::string text;
            for (const auto& p : enumerate_partitions(d_, max_part_, max_length_)) {
                j.push_back(json::parts(p));
                text += partition_text(p) + '\n';
            }
            if (!text.empty()) text.pop_back();
            emit(j, text);
            return kExitOk;
        });

        auto* ssyt = part->add_subcommand("ssyt", "semistandard tableaux of a shape with entries 1..n");
        ssyt->add_option("LAMBDA", lambda_text_)->required();
        ssyt->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        on(ssyt, [this] {
            Json j = Json::array();
            std::string text;
            for (const auto& t : enumerate_ssyt(Partition(parse_part_list(lambda_text_)), n_)) {
                j.push_back(t.rows);
                text += Json(t.rows).dump() + '\n';
            }
            if (!text.empty()) text.pop_back();
            emit(j, text);
            return kExitOk;
        });

        auto* hook = part->add_subcommand("hook", "whether lambda fits the (n,m)-hook, i.e. lambda_{n+1} <= m");
        hook->add_option("LAMBDA", lambda_text_)->required();
        hook->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        hook->add_option("--m", m_)->required()->check(CLI::NonNegativeNumber);
        on(hook, [this] {
            const bool in = hook_contains(Partition(parse_part_list(lambda_text_)), n_, m_);
            emit({{"contained", in}}, in ? "true" : "false");
            return kExitOk;
        });
    }

    void add_polynomial(CLI::App& app) {
        auto* ex = app.add_subcommand("expand", "evaluate an expression to a c-polynomial");
        ex->add_option("EXPR", expr_);
        ex->add_option("--set", assignments_, "substitute GEN=EXPR (repeatable)");
        on(ex, [this] {
            CPolynomial p = expression(expr_);
            if (!assignments_.empty()) {
                std::map<Generator, CPolynomial> assignment;
                for (const auto& a : assignments_) {
                    const auto eq = a.find('=');
                    if (eq == std::string::npos) throw PreconditionError("--set expects GEN=EXPR, got '" + a + "'");
                    const Expr g = parse_expression(a.substr(0, eq));
                    if (g.kind != Expr::Kind::Generator) throw PreconditionError("--set: left side must be a generator");
                    assignment[g.generator] = parse_polynomial(a.substr(eq + 1));
                }
                p = specialize(p, assignment);
            }
            emit_polynomial(p);
            return kExitOk;
        });

        auto* solve = app.add_subcommand("solve", "exact solution of A x = b over Q");
        solve->add_option("--matrix", matrix_json_, "JSON rows, entries integers or \"p/q\"")->required();
        solve->add_option("--rhs", rhs_json_, "JSON vector")->required();
        on(solve, [this] {
            const Json a = Json::parse(matrix_json_), b = Json::parse(rhs_json_);
            if (!a.is_array() || !b.is_array()) throw PreconditionError("solve: --matrix and --rhs must be JSON arrays");
            const std::size_t cols = a.empty() ? 0 : a[0].size();
            RationalMatrix m(a.size(), cols);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (!a[i].is_array() || a[i].size() != cols) throw PreconditionError("solve: ragged matrix");
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_rational(a[i][j]);
            }
            std::vector<Rational> rhs;
            for (const auto& v : b) rhs.push_back(parse_rational(v));
            try {
                const auto sol = solve_exact(m, rhs);
                Json xs = Json::array();
                std::string text;
                for (const auto& x : sol.x) {
                    xs.push_back(x.get_str());
                    text += (text.empty() ? "" : " ") + x.get_str();
                }
                emit({{"consistent", true}, {"unique", sol.unique_on_block}, {"solution", xs}}, text);
            } catch (const InconsistentSystem&) {
                emit({{"consistent", false}}, "inconsistent");
            }
            return kExitOk;
        });

        auto* to = app.add_subcommand("to-schur", "expansion in the Schur basis s_lambda = det(c_{mu'_i + j - i})");
        to->add_option("EXPR", expr_);
        to->add_option("--length-bound", length_bound_)->check(CLI::NonNegativeNumber);
        on(to, [this] {
            emit_expansion(to_schur(expression(expr_), length_bound_));
            return kExitOk;
        });

        auto* q = app.add_subcommand("qtilde", "Q~_mu as a polynomial in the c_i");
        q->add_option("MU", lambda_text_)->required();
        on(q, [this] {
            emit_polynomial(qtilde(Partition(parse_part_list(lambda_text_))));
            return kExitOk;
        });

        auto* qe = app.add_subcommand("qtilde-expand", "expansion over Q~_mu modulo the LG(n) relations");
        qe->add_option("EXPR", expr_);
        qe->add_option("--n", n_)->required()->check(CLI::PositiveNumber);
        on(qe, [this] {
            emit_expansion(qtilde_expand(expression(expr_), n_));
            return kExitOk;
        });
    }

    void add_schur(CLI::App& app) {
        auto* comp = app.add_subcommand("complete", "h_k of a bundle in its Chern classes");
        comp->add_option("K", k_)->required()->check(CLI::NonNegativeNumber);
        comp->add_option("--rank", rank_e_)->check(CLI::NonNegativeNumber);
        on(comp, [this] {
            emit_polynomial(complete_from_elementary(k_, BundleSymbol{Family::C, rank_e_}));
            return kExitOk;
        });

        auto* sup = app.add_subcommand("supersymmetric", "s_k(E - F), E in c, F in c'");
        sup->add_option("K", k_)->required()->check(CLI::NonNegativeNumber);
        sup->add_option("--rank-e", rank_e_)->check(CLI::NonNegativeNumber);
        sup->add_option("--rank-f", rank_f_)->check(CLI::NonNegativeNumber);
        on(sup, [this] {
            emit_polynomial(supersymmetric_s(k_, {Family::C, rank_e_}, {Family::CPrime, rank_f_}));
            return kExitOk;
        });

        auto* s = app.add_subcommand("schur", "s_lambda(E - F) by Jacobi-Trudi, E in c, F in c'");
        s->add_option("LAMBDA", lambda_text_)->required();
        s->add_option("--rank-e", rank_e_)->check(CLI::NonNegativeNumber);
        s->add_option("--rank-f", rank_f_)->check(CLI::NonNegativeNumber);
        auto* dual = s->add_flag("--dual", dual_, "dual Jacobi-Trudi in the c_i of E alone");
        s->add_flag("--split", split_, "expand over s_alpha(E) s_beta(F*)")->excludes(dual);
        on(s, [this] {
            const Partition lambda(parse_part_list(lambda_text_));
            if (dual_) {
                emit_polynomial(schur_dual_jt(lambda));
            } else if (split_) {
                const auto b = super_split(lambda, rank_e_, rank_f_);
                std::string text;
                for (const auto& [k, v] : b)
                    text += v.get_str() + " " + k.first.to_string() + " " + k.second.to_string() + '\n';
                if (!text.empty()) text.pop_back();
                emit(json::expansion(b), text);
            } else {
                emit_polynomial(schur_jt(lambda, {Family::C, rank_e_}, {Family::CPrime, rank_f_}));
            }
            return kExitOk;
        });

        auto* lr = app.add_subcommand("lr", "Littlewood-Richardson product s_lambda * s_mu");
        lr->add_option("LAMBDA", lambda_text_)->required();
        lr->add_option("MU", mu_text_)->required();
        lr->add_flag("--oracle", oracle_, "compute by tableau sums in |lambda| + |mu| variables");
        on(lr, [this] {
            const Partition a(parse_part_list(lambda_text_)), b(parse_part_list(mu_text_));
            emit_expansion(oracle_ ? lr_oracle(a, b) : lr_multiply(a, b));
            return kExitOk;
        });
    }

    void add_rings(CLI::App& app) {
        auto* gr = app.add_subcommand("gr", "cohomology of the Grassmannian Gr(r, n)");
        gr->add_option("--r", r_)->required()->check(CLI::PositiveNumber);
        gr->add_option("--n", n_)->required()->check(CLI::PositiveNumber);
        gr->require_subcommand(1);
        auto ring = [this] { return GrassmannianRing(r_, n_); };

        auto* red = gr->add_subcommand("reduce", "Schubert expansion of a polynomial in c_1..c_r");
        red->add_option("EXPR", expr_);
        on(red, [this, ring] {
            emit_expansion(ring().reduce(expression(expr_)));
            return kExitOk;
        });
        auto* in = gr->add_subcommand("integrate", "degree of a top-degree class");
        in->add_option("EXPR", expr_);
        on(in, [this, ring] {
            const auto g = ring();
            const Integer v = g.integrate(g.reduce(expression(expr_)));
            emit({{"integral", v.get_str()}}, v.get_str());
            return kExitOk;
        });
        auto* du = gr->add_subcommand("dual", "Poincare dual partition");
        du->add_option("LAMBDA", lambda_text_)->required();
        on(du, [this, ring] {
            const Partition d = ring().dual(Partition(parse_part_list(lambda_text_)));
            emit(json::parts(d), partition_text(d));
            return kExitOk;
        });
        auto* pa = gr->add_subcommand("pairing", "intersection matrices basis(d) x basis(top - d)");
        pa->add_option("--degree", degree_)->check(CLI::NonNegativeNumber);
        on(pa, [this, ring] {
            const auto g = ring();
            emit_pairings(g.top_degree(), [&](int d) { return g.basis(d); }, [&](int d) { return g.pairing(d); });
            return kExitOk;
        });

        auto* lg = app.add_subcommand("lg", "cohomology of the Lagrangian Grassmannian LG(n)");
        lg->add_option("--n", n_)->required()->check(CLI::PositiveNumber);
        lg->require_subcommand(1);
        auto lring = [this]() -> const LagrangianRing& { return lagrangian_ring(n_); };

        auto* lred = lg->add_subcommand("reduce", "Q~ expansion of a polynomial in the c_i");
        lred->add_option("EXPR", expr_);
        on(lred, [this, lring] {
            emit_expansion(lring().reduce(expression(expr_)));
            return kExitOk;
        });
        auto* lin = lg->add_subcommand("integrate", "degree of a top-degree class");
        lin->add_option("EXPR", expr_);
        on(lin, [this, lring] {
            const auto& g = lring();
            const Integer v = g.integrate(g.reduce(expression(expr_)));
            emit({{"integral", v.get_str()}}, v.get_str());
            return kExitOk;
        });
        auto* ldu = lg->add_subcommand("dual", "Poincare dual strict partition");
        ldu->add_option("MU", lambda_text_)->required();
        on(ldu, [this, lring] {
            const StrictPartition d = lring().dual(StrictPartition(parse_part_list(lambda_text_)));
            emit(json::parts(d), partition_text(d));
            return kExitOk;
        });
        auto* lre = lg->add_subcommand("restrict", "restriction of the Grassmannian class X^lambda to LG(n)");
        lre->add_option("LAMBDA", lambda_text_)->required();
        on(lre, [this, lring] {
            emit_expansion(lring().restrict(Partition(parse_part_list(lambda_text_))));
            return kExitOk;
        });
        auto* lpa = lg->add_subcommand("pairing", "intersection matrices basis(d) x basis(top - d)");
        lpa->add_option("--degree", degree_)->check(CLI::NonNegativeNumber);
        on(lpa, [this, lring] {
            const auto& g = lring();
            emit_pairings(g.top_degree(), [&](int d) { return g.basis(d); }, [&](int d) { return g.pairing(d); });
            return kExitOk;
        });
    }

    template <class BasisFn, class PairingFn>
    void emit_pairings(int top, BasisFn basis, PairingFn pairing) {
        if (degree_ && *degree_ > top) throw PreconditionError("pairing: degree exceeds top degree " + std::to_string(top));
        Json blocks = Json::array();
        std::string text;
        for (int d = 0; d <= top; ++d) {
            if (degree_ && *degree_ != d) continue;
            Json rows = Json::array(), cols = Json::array();
            for (const auto& p : basis(d)) rows.push_back(json::parts(p));
            for (const auto& p : basis(top - d)) cols.push_back(json::parts(p));
            const IntegerMatrix m = pairing(d);
            blocks.push_back({{"degree", d}, {"rows", rows}, {"cols", cols}, {"matrix", json::matrix(m)}});
            text += "degree " + std::to_string(d) + '\n' + matrix_text(m);
        }
        if (!text.empty()) text.pop_back();
        emit(blocks, text);
    }

    void add_positivity(CLI::App& app) {
        auto* cert = app.add_subcommand("certify", "Schur positivity: nonzero with all s_lambda coefficients >= 0");
        cert->add_option("EXPR", expr_);
        cert->add_option("--length-bound", length_bound_)->check(CLI::NonNegativeNumber);
        on(cert, [this] {
            const CPolynomial p = expression(expr_);
            const auto r = certify(p, length_bound_, to_string(p));
            emit(json::report(r), report_text(r));
            return r.verdict == Verdict::NotNonnegative ? kExitNegative : kExitOk;
        });

        auto* thom = app.add_subcommand("thom-verify", "certify a built-in table of Thom polynomials");
        thom->add_option("--table", table_)->required()->check(CLI::IsMember({"classical", "lagrangian", "legendrian"}));
        on(thom, [this] {
            if (table_ == "classical") return emit_reports(verify_thom_table());
            if (table_ == "lagrangian") return emit_reports(verify_lagrangian_table());
            return emit_reports(verify_legendrian_table());
        });

        auto* sb = app.add_subcommand("schur-bundle", "s_mu(S^lambda E) in the Schur basis of E");
        sb->add_option("--rank", n_)->required()->check(CLI::PositiveNumber);
        sb->add_option("--functor", lambda_text_)->required();
        sb->add_option("--class", mu_text_)->required();
        on(sb, [this] {
            emit_expansion(schur_bundle_class(Partition(parse_part_list(lambda_text_)),
                                              Partition(parse_part_list(mu_text_)), n_));
            return kExitOk;
        });

        auto* leg = app.add_subcommand("legendrian", "Legendrian class over q[...] v1^a v2^b and its positivity");
        leg->add_option("EXPR", expr_);
        leg->add_option("--n", n_)->check(CLI::PositiveNumber);
        leg->add_flag("--lagrangian", lagrangian_, "print only the v1 = v2 = 0 part");
        on(leg, [this] {
            const auto x = legendrian_parse(expression_text(expr_), n_ ? n_ : kLegendrianTableRank);
            if (lagrangian_) {
                emit_expansion(lagrangian_part(x));
                return kExitOk;
            }
            const auto r = legendrian_positivity(x, x.to_string());
            emit(json::report(r), report_text(r));
            return r.verdict == Verdict::NotNonnegative ? kExitNegative : kExitOk;
        });
    }

    template <class Report>
    int emit_reports(const std::vector<Report>& reports) {
        Json j = Json::array();
        std::string text;
        bool negative = false;
        for (const auto& r : reports) {
            j.push_back(json::report(r));
            text += report_text(r) + '\n';
            negative = negative || r.verdict == Verdict::NotNonnegative;
        }
        if (!text.empty()) text.pop_back();
        emit(j, text);
        return negative ? kExitNegative : kExitOk;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::function<int()> action_;

    bool pretty_ = false;
    std::string input_file_;
    std::string expr_, lambda_text_, mu_text_, table_, matrix_json_, rhs_json_;
    std::vector<std::string> assignments_;
    int d_ = 0, n_ = 0, m_ = 0, r_ = 0, k_ = 0;
    std::optional<int> max_part_, max_length_, length_bound_, rank_e_, rank_f_, degree_;
    bool dual_ = false, split_ = false, oracle_ = false, lagrangian_ = false;
};

} // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a certification found a negative coefficient, 2 usage or input errors, 3 internal errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return detail::Session(out, err).run(args);
}

} // namespace schubert::cli
