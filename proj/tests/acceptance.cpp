// Acceptance suite: runs every acceptance criterion at its stated bound and
// prints one PASS/FAIL line per criterion.  Exact arithmetic throughout, so
// every comparison is exact equality; the per-criterion wall-clock budgets
// are enforced as failures.
//
// Usage: acceptance <path-to-cli-binary>

#include <unistd.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plucker/format.hpp"
#include "plucker/invariant.hpp"
#include "plucker/parse.hpp"

#include "support.hpp"

using namespace plucker;
using namespace plucker::testing;

namespace {

std::string g_cli;
std::vector<std::string> g_failures;  // per-criterion scratch

void expect(bool ok, const std::string& what) {
    if (!ok) g_failures.push_back(what);
}

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    std::string base = "/tmp/plucker_acceptance_" + std::to_string(getpid());
    std::string out_file = base + "_out.txt";
    std::string err_file = base + "_err.txt";
    std::string cmd = g_cli + " " + args + " >" + out_file + " 2>" + err_file;
    int rc = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

// ---- criterion 1: straightening soundness on random bracket polynomials

bool criterion_straightening() {
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        Rng rng(1001);
        for (int k = 0; k < 300; ++k) {
            int n = static_cast<int>(rng.range(2, 6));
            RingContext ctx{n, f};
            BracketPolynomial b = random_bracket_polynomial(ctx, rng, 5, 4);
            BracketPolynomial s = b.straighten();
            expect(s.is_standard_form(), "straighten output not standard");
            expect(s.expand() == b.expand(), "straighten changed the expansion");
        }
    }
    return g_failures.empty();
}

// ---- criterion 2: the standard-product basis at desk scale

bool criterion_basis() {
    RingContext ctx{4, Field::rationals()};
    auto tableaux = standard_tableaux(4, 3);
    expect(tableaux.size() > 1, "enumeration came up empty");
    std::set<Monomial> leads;
    for (const Tableau& t : tableaux) {
        Polynomial p =
            BracketPolynomial::term(ctx, t, Scalar::of(ctx.field, 1)).expand();
        auto [lm, lc] = p.leading_term();
        Monomial forced(ctx.n);
        for (const Column& c : t.columns()) {
            forced.bump(Monomial::position_x(c.i), 1);
            forced.bump(Monomial::position_y(c.j), 1);
        }
        expect(lm == forced, "leading monomial is not prod x_i*y_j");
        expect(lc == Scalar::rational(1), "leading coefficient is not 1");
        expect(leads.insert(lm).second, "two standard products share a lead");
    }
    return g_failures.empty();
}

// ---- criterion 3: constructive representation of manufactured invariants

bool criterion_constructive() {
    Rng rng(1003);
    for (int k = 0; k < 100; ++k) {
        int n = static_cast<int>(rng.range(2, 6));
        RingContext ctx{n, Field::rationals()};
        BracketPolynomial b = random_bracket_polynomial(ctx, rng, 5, 4);
        BracketPolynomial nf = b.straighten();
        Polynomial p = b.expand();

        InvarianceCertificate cert = sl2_certificate(p);
        expect(cert.verdict, "certificate rejected a bracket expansion");
        expect(sl2_invariant_by_generators(p), "shear test rejected a bracket expansion");
        if (!cert.verdict) continue;
        BracketPolynomial rep = represent_sl2(p);
        expect(rep.expand() == p, "representation does not expand back");
        expect(rep == nf, "representation differs from the straighten normal form");
    }
    return g_failures.empty();
}

// ---- criterion 4: consistent rejection of non-invariants

bool criterion_rejection() {
    RingContext ctx2{2, Field::rationals()};
    std::vector<Polynomial> named = {
        Polynomial::x(ctx2, 1),
        Polynomial::x(ctx2, 1) * Polynomial::y(ctx2, 1),
        Polynomial::x(ctx2, 1) * Polynomial::y(ctx2, 2),
    };
    for (const Polynomial& p : named) {
        expect(!sl2_certificate(p).verdict, "certificate accepted a non-invariant");
        expect(!sl2_invariant_by_generators(p), "shear test accepted a non-invariant");
    }

    Rng rng(1004);
    int rejected = 0;
    while (rejected < 100) {
        int n = static_cast<int>(rng.range(2, 5));
        RingContext ctx{n, Field::rationals()};
        Polynomial p = random_bracket_polynomial(ctx, rng, 4, 3).expand();
        Monomial m = random_monomial(ctx, rng, 2);
        if (m.is_constant()) continue;  // constants stay invariant
        Polynomial perturbed =
            p + Polynomial::term(ctx, m, random_scalar(ctx.field, rng, true));
        bool cert_says = sl2_certificate(perturbed).verdict;
        bool gens_say = sl2_invariant_by_generators(perturbed);
        expect(cert_says == gens_say, "the two tests disagree");
        if (cert_says != gens_say) return false;
        if (cert_says) continue;  // accidental invariant; draw again
        ++rejected;
    }
    return g_failures.empty();
}

// ---- criterion 5: the key substitution identity

bool criterion_identity() {
    RingContext ctx{2, Field::rationals()};
    Polynomial f12 = hand_bracket_expansion(ctx, 1, 2);
    expect(f12.substitute(hand_sigma_images(ctx), ctx) == f12 * f12,
           "substituting f into f12 is not f12^2");

    Rng rng(1005);
    for (int k = 0; k < 50; ++k) {
        int n = static_cast<int>(rng.range(2, 5));
        RingContext c{n, Field::rationals()};
        Polynomial p = random_bracket_polynomial(c, rng, 4, 3).expand();
        InvarianceCertificate cert = sl2_certificate(p);
        expect(cert.verdict, "manufactured invariant rejected");

        auto comps = p.bihomogeneous_components();
        expect(cert.component_bidegrees.size() == comps.size(),
               "certificate bidegree count mismatch");
        auto images = hand_sigma_images(c);
        Polynomial f = hand_bracket_expansion(c, 1, 2);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            expect(comps[i].x_degree == comps[i].y_degree,
                   "invariant component with unequal bidegree");
            if (i < cert.component_bidegrees.size())
                expect(cert.component_bidegrees[i] ==
                           Bidegree{comps[i].x_degree, comps[i].y_degree},
                       "certified m differs from the component bidegree");
            expect(f.pow(comps[i].x_degree) * comps[i].part ==
                       comps[i].part.substitute(images, c),
                   "certified identity fails on re-assertion");
        }
    }
    return g_failures.empty();
}

// ---- criterion 6: a bracket quotient that is again a bracket polynomial

bool criterion_bracket_quotient() {
    RingContext ctx{4, Field::rationals()};
    Polynomial p = hand_bracket_expansion(ctx, 1, 3) * hand_bracket_expansion(ctx, 2, 4) -
                   hand_bracket_expansion(ctx, 1, 4) * hand_bracket_expansion(ctx, 2, 3);
    Polynomial q(ctx);
    try {
        q = p.exact_div(hand_bracket_expansion(ctx, 1, 2));
    } catch (const NotDivisible&) {
        expect(false, "f12 does not divide f13*f24 - f14*f23");
        return false;
    }
    BracketPolynomial rep = represent_sl2(q);
    expect(rep == BracketPolynomial::bracket(ctx, 3, 4),
           "quotient does not represent as [3,4]");
    return g_failures.empty();
}

// ---- criterion 7: finite-field counterexamples

bool criterion_counterexamples() {
    for (std::uint64_t p : {2ull, 3ull}) {
        for (int i : {1, 2}) {
            CounterexampleReport r = finite_field_counterexample(p, i, true);
            expect(r.group_size == (p == 2 ? 6 : 48), "wrong group order");
            expect(r.checked == (p == 2 ? 6u : 48u), "scan did not complete");
            expect(r.semi_invariant, "p_i failed semi-invariance");
            expect(r.bidegree_obstruction, "missing bidegree obstruction");
        }
    }
    CliResult refusal = run_cli("check-sl2 --n 2 --field F5 \"x1*y1\"");
    expect(refusal.code == 1, "finite-field check-sl2 must exit 1");
    expect(refusal.err.find("finite fields") != std::string::npos,
           "refusal diagnostic missing");
    return g_failures.empty();
}

// ---- criterion 8: semi-invariance of the generators

bool criterion_semi_invariance() {
    for (std::uint64_t q : {2ull, 3ull}) {
        RingContext ctx{4, Field::prime(q)};
        auto group = all_invertible(q);
        expect(group.size() == (q == 2 ? 6u : 48u), "wrong |GL2|");
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                Polynomial f = hand_bracket_expansion(ctx, i, j);
                for (const ActionMatrix& m : group)
                    expect(check_semi_invariant(f, m), "bracket not semi-invariant");
            }
    }
    RingContext ctx{4, Field::rationals()};
    Rng rng(1008);
    for (int k = 0; k < 100; ++k) {
        ActionMatrix m = random_invertible(ctx.field, rng);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                expect(check_semi_invariant(hand_bracket_expansion(ctx, i, j), m),
                       "bracket not semi-invariant over Q");
    }
    return g_failures.empty();
}

// ---- criterion 9: frontend round trips, JSON determinism, exit codes

bool criterion_frontend() {
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        Rng rng(1009);
        for (int k = 0; k < 100; ++k) {
            int n = static_cast<int>(rng.range(2, 5));
            JobConfig cfg{n, f};
            RingContext ctx{n, f};
            Polynomial p = random_polynomial(ctx, rng, 5, 3);
            expect(elaborate_polynomial(parse_expression(to_text(p), cfg), cfg) == p,
                   "polynomial text round trip failed");
            BracketPolynomial b = random_bracket_polynomial(ctx, rng, 4, 3);
            expect(elaborate_bracket(parse_expression(to_text(b), cfg), cfg) == b,
                   "bracket text round trip failed");
        }
    }

    std::string args =
        "--json straighten --n 4 \"[1,4]*[2,3] + 2*[1,2]*[1,2] - [3,4]*[1,2]\"";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    expect(first.code == 0, "straighten failed");
    expect(first.err.empty(), "success wrote to the error stream");
    expect(!first.out.empty() && first.out == second.out,
           "JSON output is not byte-identical across runs");

    CliResult syntax = run_cli("straighten --n 2 \"[1,2\"");
    expect(syntax.code == 2, "syntax error must exit 2");
    expect(!syntax.err.empty(), "syntax error needs a diagnostic");

    CliResult mixed = run_cli("straighten --n 2 \"x1 + [1,2]\"");
    expect(mixed.code == 2, "mixed expression must exit 2");
    expect(!mixed.err.empty(), "mixed expression needs a diagnostic");

    CliResult refused = run_cli("check-sl2 --n 2 --field F7 \"x1*y2\"");
    expect(refused.code == 1, "finite-field refusal must exit 1");
    expect(!refused.err.empty(), "refusal needs a diagnostic");

    CliResult plain = run_cli("straighten --n 4 \"[1,4]*[2,3]\"");
    expect(plain.out == "[1,3]*[2,4] - [1,2]*[3,4]\n", "canonical text differs");
    return g_failures.empty();
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    std::vector<Criterion> criteria = {
        {1, "straightening soundness (600 random, Q and F5)", 30.0, criterion_straightening},
        {2, "standard-product basis, n = 4, up to 3 columns", 5.0, criterion_basis},
        {3, "constructive representation of 100 invariants", 60.0, criterion_constructive},
        {4, "consistent rejection of non-invariants", 30.0, criterion_rejection},
        {5, "substitution identity and certified exponents", 10.0, criterion_identity},
        {6, "bracket quotient representation at n = 4", 5.0, criterion_bracket_quotient},
        {7, "finite-field counterexamples (GL2(F2), GL2(F3))", 10.0, criterion_counterexamples},
        {8, "semi-invariance of all brackets at n = 4", 10.0, criterion_semi_invariance},
        {9, "frontend round trips, JSON determinism, exit codes", 10.0, criterion_frontend},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        g_failures.clear();
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            g_failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        bool in_budget = elapsed < c.budget_seconds;
        if (ok && in_budget) {
            std::printf("PASS  %d  %s (%.2fs < %.0fs)\n", c.number, c.name, elapsed,
                        c.budget_seconds);
        } else {
            ++failed;
            std::printf("FAIL  %d  %s (%.2fs, budget %.0fs)\n", c.number, c.name,
                        elapsed, c.budget_seconds);
            if (!in_budget) std::printf("      over time budget\n");
            for (const std::string& f : g_failures)
                std::printf("      %s\n", f.c_str());
        }
    }
    if (failed == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failed);
    return 1;
}
