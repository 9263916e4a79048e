// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace schubert;
using testing_support::as_map;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome classical_thom_corpus() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto reports = verify_thom_table();
    const double elapsed = seconds_since(start);
    for (const auto& r : reports) {
        o.require(r.verdict == Verdict::Positive, r.name + " is " + to_string(r.verdict));
        o.require(r.expansion.coefficient_sum() > 0, r.name + " has nonpositive coefficient sum");
    }
    o.require(reports.size() == 6, "table size");
    const std::map<std::string, oracle::ChernTerms> monomials{
        {"A_3", {{1, {1, 1, 1}}, {3, {1, 2}}, {2, {3}}}},
        {"I_{2,2}", {{1, {2, 2}}, {-1, {1, 3}}}},
    };
    const std::map<std::string, std::map<std::vector<int>, std::int64_t>> frozen{
        {"A_3", {{{3}, 1}, {{2, 1}, 5}, {{1, 1, 1}, 6}}},
        {"I_{2,2}", {{{2, 2}, 1}}},
    };
    for (const auto& r : reports) {
        if (!frozen.count(r.name)) continue;
        o.require(oracle::schur_expand(monomials.at(r.name)) == frozen.at(r.name), r.name + " oracle disagrees with frozen value");
        o.require(as_map(r.expansion) == frozen.at(r.name), r.name + " = " + r.expansion.to_string());
    }
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (o.pass) o.detail = "6 entries POSITIVE in " + std::to_string(elapsed) + " s";
    return o;
}

Outcome lr_oracle_equivalence() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int pairs = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& lambda : enumerate_partitions(a))
                for (const auto& mu : enumerate_partitions(b)) {
                    const SchurExpansion x = lr_multiply(lambda, mu);
                    o.require(x == lr_oracle(lambda, mu), "disagree at " + lambda.to_string() + " * " + mu.to_string());
                    o.require(x.all_nonnegative(), "negative coefficient at " + lambda.to_string() + " * " + mu.to_string());
                    ++pairs;
                }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
    o.require(pairs == 139, "pair count " + std::to_string(pairs));
    if (o.pass) o.detail = std::to_string(pairs) + " pairs in " + std::to_string(elapsed) + " s";
    return o;
}

template <class Ring, class Dual>
int check_permutation_pairing(Outcome& o, const Ring& ring, Dual dual, const std::string& label) {
    int entries = 0;
    for (int d = 0; d <= ring.top_degree(); ++d) {
        const auto rows = ring.basis(d), cols = ring.basis(ring.top_degree() - d);
        const IntegerMatrix m = ring.pairing(d);
        o.require(rows.size() == cols.size(), label + " basis sizes differ in degree " + std::to_string(d));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                o.require(m(i, j) == (dual(rows[i]) == cols[j] ? 1 : 0),
                          label + " entry " + rows[i].to_string() + " x " + cols[j].to_string());
                ++entries;
            }
    }
    return entries;
}

Outcome grassmannian_duality() {
    Outcome o;
    int entries = 0;
    for (const auto& [r, n] : std::array<std::pair<int, int>, 3>{{{2, 4}, {2, 5}, {3, 6}}}) {
        const GrassmannianRing g(r, n);
        entries += check_permutation_pairing(o, g, [&](const Partition& p) { return g.dual(p); },
                                             "Gr(" + std::to_string(r) + "," + std::to_string(n) + ")");
    }
    if (o.pass) o.detail = std::to_string(entries) + " pairing entries";
    return o;
}

Outcome lagrangian_duality() {
    Outcome o;
    int entries = 0, multiples = 0;
    for (int n = 1; n <= 4; ++n) {
        const LagrangianRing& lg = lagrangian_ring(n);
        const std::string label = "LG(" + std::to_string(n) + ")";
        entries += check_permutation_pairing(o, lg, [&](const StrictPartition& mu) { return lg.dual(mu); }, label);
        for (int i = 1; i <= n; ++i)
            for (int d = 0; d + 2 * i <= lg.top_degree(); ++d)
                for (const auto& nu : enumerate_partitions(d, n, std::nullopt)) {
                    const CPolynomial m = CPolynomial::term(CMonomial::from_partition(nu));
                    o.require(lg.reduce(m * qtilde(Partition({i, i}))).is_zero(),
                              label + " keeps c" + nu.to_string() + " * Q~_{" + std::to_string(i) + "," + std::to_string(i) + "}");
                    ++multiples;
                }
    }
    if (o.pass) o.detail = std::to_string(entries) + " pairing entries, " + std::to_string(multiples) + " ideal multiples";
    return o;
}

Outcome lg_basis_certificate() {
    Outcome o;
    int slices = 0;
    for (int n = 1; n <= 4; ++n) {
        const LagrangianRing& lg = lagrangian_ring(n);
        for (int d = 0; d <= n * n; ++d) {
            const std::string at = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            o.require(lg.monomial_count(d) == lg.basis(d).size() + lg.ideal_rank(d), "dimension identity fails at " + at);
            o.require(lg.basis_unique(d), "basis coordinates not unique at " + at);
            ++slices;
        }
    }
    if (o.pass) o.detail = std::to_string(slices) + " degree slices";
    return o;
}

Outcome restriction_positivity() {
    Outcome o;
    int classes = 0;
    for (int n = 2; n <= 3; ++n) {
        const LagrangianRing& lg = lagrangian_ring(n);
        for (int d = 0; d <= n * n; ++d)
            for (const auto& lambda : enumerate_partitions(d, n, n)) {
                const QExpansion x = lg.restrict(lambda);
                o.require(x.all_nonnegative(), lambda.to_string() + " -> " + x.to_string());
                ++classes;
            }
    }
    if (o.pass) o.detail = std::to_string(classes) + " classes";
    return o;
}

Outcome schur_bundle_positivity() {
    Outcome o;
    int cases = 0;
    for (const auto& lambda : {Partition({1}), Partition({2}), Partition({1, 1})})
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 3; ++d)
                for (const auto& mu : enumerate_partitions(d)) {
                    const SchurExpansion x = schur_bundle_class(lambda, mu, n);
                    const std::string at = lambda.to_string() + " " + mu.to_string() + " n=" + std::to_string(n);
                    o.require(x.all_nonnegative(), "negative at " + at);
                    o.require(as_map(x) == oracle::schur_bundle(lambda.parts(), mu.parts(), n), "oracle disagrees at " + at);
                    if (lambda == Partition({1})) {
                        SchurExpansion id(mu.weight());
                        if (static_cast<int>(mu.length()) <= n) id.add(mu, 1);
                        o.require(x == id, "identity fails at " + at);
                    }
                    ++cases;
                }
    if (o.pass) o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome supersymmetric_consistency() {
    Outcome o;
    int checks = 0;
    for (int d = 0; d <= 8; ++d)
        for (const auto& lambda : enumerate_partitions(d)) {
            o.require(schur_jt(lambda) == schur_dual_jt(lambda), "determinants differ at " + lambda.to_string());
            ++checks;
        }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int d = 1; d <= 6; ++d)
                for (const auto& lambda : enumerate_partitions(d)) {
                    const CPolynomial s = schur_jt(lambda, {Family::C, a}, {Family::CPrime, b});
                    o.require(s.is_zero() == !hook_contains(lambda, a, b),
                              "hook mismatch at " + lambda.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
                    ++checks;
                }
    const BundleSymbol e{Family::C, std::nullopt}, f{Family::CPrime, std::nullopt};
    for (const auto& entry : kClassicalThomTable) {
        const CPolynomial p = parse_polynomial(entry.polynomial);
        std::map<Generator, CPolynomial> difference;
        for (int i = 1; i <= 6; ++i) difference[chern(i)] = difference_chern(i, e, f);
        o.require(pure_e_slice(bischur_expand(specialize(p, difference), e, f)) == to_schur(p),
                  std::string("a != b(.,0) on ") + std::string(entry.name));
        ++checks;
    }
    if (o.pass) o.detail = std::to_string(checks) + " identities";
    return o;
}

Outcome legendrian_corpus() {
    Outcome o;
    for (const auto& entry : kLegendrianThomTable) {
        const std::string name(entry.name);
        try {
            const LegendrianClass x = legendrian_parse(entry.expression, kLegendrianTableRank);
            o.require(x.degree().has_value(), name + " is empty");
            o.require(legendrian_positivity(x, name).verdict == Verdict::Positive, name + " not positive");
            const std::string bold = lagrangian_part(x).to_string();
            o.require(bold == entry.lagrangian, name + " bold part " + bold);
        } catch (const Error& e) {
            o.require(false, name + ": " + e.what());
        }
    }
    for (const auto& r : verify_lagrangian_table())
        o.require(r.verdict == Verdict::Positive, r.name + " Lagrangian part not positive");
    if (o.pass) o.detail = std::to_string(kLegendrianThomTable.size()) + " entries";
    return o;
}

struct Process {
    int status;
    std::string out;
};

Process shell(const std::string& command) {
    Process p{-1, {}};
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) p.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

Outcome determinism() {
    Outcome o;
    const std::string cli = SCHUBERT_CLI_PATH;
    for (const char* table : {"classical", "lagrangian", "legendrian"}) {
        const std::string command = "'" + cli + "' thom-verify --table " + table + " 2>/dev/null";
        const Process first = shell(command), second = shell(command);
        o.require(first.status == 0 && second.status == 0, std::string(table) + " exit " + std::to_string(first.status));
        o.require(!first.out.empty() && first.out == second.out, std::string(table) + " output differs between runs");
    }
    const Process negative = shell("'" + cli + "' certify 'c2 - c1^2' 2>/dev/null");
    o.require(negative.status == 1, "NOT_NONNEGATIVE exit " + std::to_string(negative.status));
    o.require(negative.out.find("\"NOT_NONNEGATIVE\"") != std::string::npos, "verdict missing from output");
    const Process legendrian = shell("'" + cli + "' legendrian 'q[2] - v1*q[1]' 2>/dev/null");
    o.require(legendrian.status == 1, "Legendrian NOT_NONNEGATIVE exit " + std::to_string(legendrian.status));
    o.require(shell("'" + cli + "' certify 'c2 - - c1' 2>/dev/null").status == 2, "parse error exit");
    if (o.pass) o.detail = "3 tables byte-identical, exit codes 1/1/2";
    return o;
}

} // namespace

int main() {
    const std::array<std::pair<const char*, std::function<Outcome()>>, 10> criteria{{
        {"classical Thom corpus is Schur positive", classical_thom_corpus},
        {"LR product agrees with tableau oracle", lr_oracle_equivalence},
        {"Grassmannian pairing is rectangle duality", grassmannian_duality},
        {"Lagrangian pairing is complement duality", lagrangian_duality},
        {"LG basis dimension certificate", lg_basis_certificate},
        {"restriction to LG is nonnegative", restriction_positivity},
        {"Schur bundle classes are nonnegative", schur_bundle_positivity},
        {"supersymmetric Schur consistency", supersymmetric_consistency},
        {"Legendrian corpus", legendrian_corpus},
        {"determinism and exit codes", determinism},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail << ")\n";
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << "\n";
    return failures ? 1 : 0;
}
