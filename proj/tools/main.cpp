// Command-line frontend: straightening, bracket expansion, SL2/GL2
// invariance decisions and representations, and the finite-field
// counterexample report.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plucker/format.hpp"
#include "plucker/invariant.hpp"
#include "plucker/parse.hpp"

namespace {

using nlohmann::ordered_json;
using namespace plucker;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int classify(const std::exception& e) {
    if (dynamic_cast<const plucker::ParseError*>(&e)) return 2;
    if (dynamic_cast<const MixedExpression*>(&e)) return 2;
    if (dynamic_cast<const UsageError*>(&e)) return 2;
    return 1;
}

Field parse_field(const std::string& spec) {
    if (spec == "Q") return Field::rationals();
    if (spec.size() >= 2 && spec[0] == 'F' &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        try {
            return Field::prime(std::stoull(spec.substr(1)));
        } catch (const std::exception& e) {
            throw UsageError("invalid --field '" + spec + "': " + e.what());
        }
    }
    throw UsageError("invalid --field '" + spec + "' (expected Q or F<p>)");
}

struct Options {
    bool json = false;
    std::string batch;
    std::int64_t fuel = kDefaultStraightenFuel;

    int n = 0;
    std::string field_spec = "Q";
    std::string method = "fft";
    std::string expr;
    std::string expr2;

    std::uint64_t prime = 0;
    int index = 1;
    bool exhaustive = false;
};

ordered_json context_json(const JobConfig& cfg) {
    return ordered_json{{"n", cfg.n}, {"field", cfg.field.name()}};
}

ordered_json bidegrees_json(const std::vector<Bidegree>& bds) {
    ordered_json a = ordered_json::array();
    for (const Bidegree& b : bds) a.push_back({b.x_degree, b.y_degree});
    return a;
}

ordered_json obstruction_json(const Obstruction& o) {
    const char* key =
        o.kind == Obstruction::Kind::UnequalBidegree ? "bidegree" : "identity";
    return ordered_json{{key, {o.bidegree.x_degree, o.bidegree.y_degree}}};
}

std::string obstruction_text(const Obstruction& o) {
    std::string kind =
        o.kind == Obstruction::Kind::UnequalBidegree ? "bidegree" : "identity";
    return kind + " (" + std::to_string(o.bidegree.x_degree) + "," +
           std::to_string(o.bidegree.y_degree) + ")";
}

void emit(const ordered_json& j, std::ostream& out) { out << j.dump() << "\n"; }

// Per-line handlers; each returns the process exit code for that line.

int run_straighten(const Options& opt, const JobConfig& cfg, const std::string& text,
                   std::ostream& out) {
    BracketPolynomial b = elaborate_bracket(parse_expression(text, cfg), cfg);
    BracketPolynomial s = b.straighten(opt.fuel);
    if (opt.json) {
        ordered_json j{{"command", "straighten"}, {"context", context_json(cfg)}};
        j["representation"] = to_text(s);
        emit(j, out);
    } else {
        out << to_text(s) << "\n";
    }
    return 0;
}

int run_expand(const Options& opt, const JobConfig& cfg, const std::string& text,
               std::ostream& out) {
    BracketPolynomial b = elaborate_bracket(parse_expression(text, cfg), cfg);
    Polynomial p = b.expand();
    if (opt.json) {
        ordered_json j{{"command", "expand"}, {"context", context_json(cfg)}};
        j["representation"] = to_text(p);
        emit(j, out);
    } else {
        out << to_text(p) << "\n";
    }
    return 0;
}

int run_check_sl2(const Options& opt, const JobConfig& cfg, const std::string& text,
                  std::ostream& out) {
    Polynomial p = elaborate_polynomial(parse_expression(text, cfg), cfg);

    std::optional<InvarianceCertificate> cert;
    std::optional<bool> by_generators;
    if (opt.method == "fft" || opt.method == "both") cert = sl2_certificate(p, opt.fuel);
    if (opt.method == "generators" || opt.method == "both")
        by_generators = sl2_invariant_by_generators(p);
    if (cert && by_generators && cert->verdict != *by_generators)
        throw InternalError("the two invariance tests disagree; this is a bug");
    bool verdict = cert ? cert->verdict : *by_generators;

    if (opt.json) {
        ordered_json j{{"command", "check-sl2"},
                       {"context", context_json(cfg)},
                       {"method", opt.method},
                       {"verdict", verdict}};
        if (cert) {
            j["bidegree"] = bidegrees_json(cert->component_bidegrees);
            if (cert->verdict)
                j["representation"] = to_text(*cert->representation);
            else
                j["obstruction"] = obstruction_json(*cert->obstruction);
        }
        emit(j, out);
    } else {
        out << "verdict: " << (verdict ? "true" : "false") << "\n";
        if (cert) {
            if (cert->verdict)
                out << "representation: " << to_text(*cert->representation) << "\n";
            else
                out << "obstruction: " << obstruction_text(*cert->obstruction) << "\n";
        }
    }
    return 0;
}

int run_represent(const Options& opt, const JobConfig& cfg, const std::string& text,
                  std::ostream& out, std::ostream& err) {
    Polynomial p = elaborate_polynomial(parse_expression(text, cfg), cfg);
    InvarianceCertificate cert = sl2_certificate(p, opt.fuel);
    if (opt.json) {
        ordered_json j{{"command", "represent"},
                       {"context", context_json(cfg)},
                       {"verdict", cert.verdict}};
        if (cert.verdict) {
            j["bidegree"] = bidegrees_json(cert.component_bidegrees);
            j["representation"] = to_text(*cert.representation);
        } else {
            j["obstruction"] = obstruction_json(*cert.obstruction);
        }
        emit(j, out);
    } else if (cert.verdict) {
        out << to_text(*cert.representation) << "\n";
    }
    if (!cert.verdict) {
        err << "error: not SL2-invariant; obstruction: "
            << obstruction_text(*cert.obstruction) << "\n";
        return 1;
    }
    return 0;
}

int run_check_gl2(const Options& opt, const JobConfig& cfg, std::ostream& out) {
    Polynomial num = elaborate_polynomial(parse_expression(opt.expr, cfg), cfg);
    Polynomial den = elaborate_polynomial(parse_expression(opt.expr2, cfg), cfg);
    bool verdict = gl2_invariant(num, den);
    if (opt.json) {
        ordered_json j{{"command", "check-gl2"},
                       {"context", context_json(cfg)},
                       {"verdict", verdict}};
        emit(j, out);
    } else {
        out << "verdict: " << (verdict ? "true" : "false") << "\n";
    }
    return 0;
}

int run_represent_gl2(const Options& opt, const JobConfig& cfg, std::ostream& out) {
    Polynomial num = elaborate_polynomial(parse_expression(opt.expr, cfg), cfg);
    Polynomial den = elaborate_polynomial(parse_expression(opt.expr2, cfg), cfg);
    auto [nb, db] = represent_gl2(num, den, opt.fuel);
    if (opt.json) {
        ordered_json j{{"command", "represent-gl2"}, {"context", context_json(cfg)}};
        j["representation"] =
            ordered_json{{"numerator", to_text(nb)}, {"denominator", to_text(db)}};
        emit(j, out);
    } else {
        out << "numerator: " << to_text(nb) << "\n";
        out << "denominator: " << to_text(db) << "\n";
    }
    return 0;
}

int run_counterexample(const Options& opt, std::ostream& out) {
    CounterexampleReport r =
        finite_field_counterexample(opt.prime, opt.index, opt.exhaustive);
    if (opt.json) {
        JobConfig cfg{r.index, Field::prime(r.prime)};
        ordered_json report{
            {"prime", json_integer(mpz_class(static_cast<unsigned long>(r.prime)))},
            {"index", r.index},
            {"group_size", json_integer(r.group_size)},
            {"checked", json_integer(mpz_class(static_cast<unsigned long>(r.checked)))},
            {"semi_invariant", r.semi_invariant},
            {"bidegree_obstruction", r.bidegree_obstruction}};
        ordered_json j{{"command", "counterexample"},
                       {"context", context_json(cfg)},
                       {"report", report}};
        emit(j, out);
    } else {
        out << "prime: " << r.prime << "\n";
        out << "index: " << r.index << "\n";
        out << "group_size: " << r.group_size.get_str() << "\n";
        out << "checked: " << r.checked << "\n";
        out << "semi_invariant: " << (r.semi_invariant ? "true" : "false") << "\n";
        out << "bidegree_obstruction: " << (r.bidegree_obstruction ? "true" : "false")
            << "\n";
    }
    return 0;
}

// Runs fn for the single EXPR or once per nonblank --batch line, in input
// order; the worst per-line code wins.
template <class Fn>
int with_expressions(const Options& opt, Fn&& fn) {
    if (opt.batch.empty()) {
        if (opt.expr.empty()) throw UsageError("missing expression argument");
        return fn(opt.expr);
    }
    if (!opt.expr.empty())
        throw UsageError("give either an expression or --batch, not both");
    std::ifstream in(opt.batch);
    if (!in) throw UsageError("cannot open batch file " + opt.batch);
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            worst = std::max(worst, fn(line));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            worst = std::max(worst, classify(e));
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;

    CLI::App app{"exact bracket algebra and SL2/GL2 invariants"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "emit one JSON object per result");
    app.add_option("--batch", opt.batch, "process one expression per line of FILE");
    app.add_option("--fuel", opt.fuel, "straightening rewrite-step bound")
        ->check(CLI::PositiveNumber);

    auto add_context = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "number of variable pairs")->required();
        sub->add_option("--field", opt.field_spec, "coefficient field (Q or F<p>)");
        sub->fallthrough();
    };

    CLI::App* straighten =
        app.add_subcommand("straighten", "standard form of a bracket expression");
    add_context(straighten);
    straighten->add_option("EXPR", opt.expr, "bracket expression");

    CLI::App* expand =
        app.add_subcommand("expand", "polynomial expansion of a bracket expression");
    add_context(expand);
    expand->add_option("EXPR", opt.expr, "bracket expression");

    CLI::App* check_sl2 =
        app.add_subcommand("check-sl2", "decide SL2-invariance of a polynomial");
    add_context(check_sl2);
    check_sl2->add_option("--method", opt.method, "fft, generators, or both")
        ->check(CLI::IsMember({"fft", "generators", "both"}));
    check_sl2->add_option("EXPR", opt.expr, "polynomial expression");

    CLI::App* represent =
        app.add_subcommand("represent", "bracket representation of an SL2-invariant");
    add_context(represent);
    represent->add_option("EXPR", opt.expr, "polynomial expression");

    CLI::App* check_gl2 =
        app.add_subcommand("check-gl2", "decide GL2-invariance of a rational function");
    add_context(check_gl2);
    check_gl2->add_option("NUM_EXPR", opt.expr, "numerator");
    check_gl2->add_option("DEN_EXPR", opt.expr2, "denominator");

    CLI::App* represent_gl2 = app.add_subcommand(
        "represent-gl2", "bracket numerator/denominator of a GL2-invariant");
    add_context(represent_gl2);
    represent_gl2->add_option("NUM_EXPR", opt.expr, "numerator");
    represent_gl2->add_option("DEN_EXPR", opt.expr2, "denominator");

    CLI::App* counterexample =
        app.add_subcommand("counterexample", "finite-field counterexample report");
    counterexample->add_option("--prime", opt.prime, "field characteristic")->required();
    counterexample->add_option("--index", opt.index, "variable pair index")->required();
    counterexample->add_flag("--exhaustive", opt.exhaustive, "enumerate all of GL2(F_p)");
    counterexample->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (counterexample->parsed()) {
            if (!opt.batch.empty())
                throw UsageError("--batch does not apply to counterexample");
            return run_counterexample(opt, std::cout);
        }

        if (opt.n < 1) throw UsageError("--n must be >= 1");
        bool needs_pairs = represent->parsed() || check_gl2->parsed() ||
                           represent_gl2->parsed() ||
                           (check_sl2->parsed() && opt.method != "generators");
        if (needs_pairs && opt.n < 2)
            throw UsageError("--n must be >= 2 for the bracket-substitution criterion");
        JobConfig cfg{opt.n, parse_field(opt.field_spec)};

        if (straighten->parsed())
            return with_expressions(opt, [&](const std::string& e) {
                return run_straighten(opt, cfg, e, std::cout);
            });
        if (expand->parsed())
            return with_expressions(opt, [&](const std::string& e) {
                return run_expand(opt, cfg, e, std::cout);
            });
        if (check_sl2->parsed())
            return with_expressions(opt, [&](const std::string& e) {
                return run_check_sl2(opt, cfg, e, std::cout);
            });
        if (represent->parsed())
            return with_expressions(opt, [&](const std::string& e) {
                return run_represent(opt, cfg, e, std::cout, std::cerr);
            });

        if (!opt.batch.empty())
            throw UsageError("--batch applies only to single-expression commands");
        if (opt.expr.empty() || opt.expr2.empty())
            throw UsageError("this command needs NUM_EXPR and DEN_EXPR");
        if (check_gl2->parsed()) return run_check_gl2(opt, cfg, std::cout);
        if (represent_gl2->parsed()) return run_represent_gl2(opt, cfg, std::cout);
        throw UsageError("no command given");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
}
