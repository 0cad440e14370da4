// chiral: command-line front end for the manifold calculus.
//
//   chiral eval "csum(E(1,7), spin(4, N(7)))" [--json]
//   chiral chirality "<expr>" [--assert-chiral CITATION] [--json]
//   chiral degrees "<expr>" [--assert-chiral CITATION] [--json]
//   chiral validate "<expr>" [--json]
//   chiral table1 --p 7 [--json]
//   chiral verify --theorem main --m 1 --p 7 [--json]
//
// Passing "-" as the expression reads one expression per line from stdin.
// Exit status: 0 success, 1 verification mismatch / violation, 2 parse or
// precondition error.

#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chiral/chiral.hpp"

namespace {

using namespace chiral;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Options {
    std::string expression;
    bool json = false;
    std::string assert_chiral;
};

std::string indent(const std::string& block, const std::string& pad) {
    std::string out;
    std::size_t start = 0;
    while (start < block.size()) {
        const std::size_t end = block.find('\n', start);
        out += pad + block.substr(start, end == std::string::npos ? std::string::npos : end - start + 1);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

ManifoldDescriptor load(const std::string& text, const Options& opt) {
    ManifoldDescriptor m = evaluate(parse(text));
    if (!opt.assert_chiral.empty()) {
        m = assert_fact(std::move(m), AxiomFact::externally_proven_strongly_chiral(opt.assert_chiral));
    }
    return m;
}

int run_eval(const std::string& text, const Options& opt) {
    const ManifoldDescriptor m = load(text, opt);
    const auto violations = validate_realizability(m);
    const DualityReport dual = check_poincare_duality(m.homology, m.dim);
    if (opt.json) {
        std::cout << to_json(m).dump() << '\n';
        return kOk;
    }
    std::cout << "expression:    " << to_string(m.expr) << '\n'
              << "dimension:     " << m.dim << '\n'
              << "homology:\n" << indent(render_cases(m.homology, "H_i"), "  ")
              << "cohomology:\n" << indent(render_cases(m.cohomology(), "H^i"), "  ")
              << "euler char.:   " << m.euler_characteristic() << '\n'
              << "pi1:           " << to_string(m.pi1) << '\n'
              << "connectivity:  " << m.connectivity << '\n'
              << "facts:         ";
    if (m.facts.empty()) std::cout << "none";
    for (std::size_t i = 0; i < m.facts.size(); ++i) std::cout << (i ? ", " : "") << to_string(m.facts[i]);
    std::cout << "\nvalidation:    Poincare duality " << (dual.ok ? "ok" : "FAILED: " + dual.message) << "; ";
    std::cout << (violations.empty() ? "no realizability violations" : std::to_string(violations.size()) + " violation(s)")
              << '\n';
    for (const auto& v : violations) std::cout << "  - " << v.message << '\n';
    return kOk;
}

int run_chirality(const std::string& text, const Options& opt) {
    const ManifoldDescriptor m = load(text, opt);
    const ChiralityVerdict v = chirality_verdict(m);
    if (opt.json) {
        json j = to_json(v);
        j["schema"] = kSchemaVersion;
        j["expression"] = to_string(m.expr);
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << to_string(m.expr) << ": " << verdict_name(v.verdict) << '\n';
    for (const auto& step : v.trace) std::cout << "  - " << step << '\n';
    return kOk;
}

int run_degrees(const std::string& text, const Options& opt) {
    const ManifoldDescriptor m = load(text, opt);
    const DegreeSet d = degree_set(m);
    if (opt.json) {
        json j = to_json(d);
        j["schema"] = kSchemaVersion;
        j["expression"] = to_string(m.expr);
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << to_string(d) << '\n';
    for (const auto& rule : d.rules) std::cout << "  - " << rule << '\n';
    return kOk;
}

int run_validate(const std::string& text, const Options& opt) {
    const ManifoldDescriptor m = load(text, opt);
    const auto violations = validate_realizability(m);
    if (opt.json) {
        json list = json::array();
        for (const auto& v : violations) list.push_back(to_json(v));
        std::cout << json{{"schema", kSchemaVersion}, {"expression", to_string(m.expr)}, {"violations", list}}.dump()
                  << '\n';
    } else if (violations.empty()) {
        std::cout << to_string(m.expr) << ": no violations\n";
    } else {
        std::cout << to_string(m.expr) << ": " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) std::cout << "  - [" << violation_name(v.kind) << "] " << v.message << '\n';
    }
    return violations.empty() ? kOk : kMismatch;
}

// Runs `fn` on one expression, or on every stdin line for "-".
template <class Fn>
int for_each_expression(const Options& opt, Fn fn) {
    auto guarded = [&](const std::string& text) {
        try {
            return fn(text, opt);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kInputError;
        } catch (const PreconditionError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kInputError;
        } catch (const ContradictionError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kMismatch;
        } catch (const std::overflow_error& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kInputError;
        }
    };
    if (opt.expression != "-") return guarded(opt.expression);
    int status = kOk;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        status = std::max(status, guarded(line));
    }
    return status;
}

int run_table1(Int p, bool as_json) {
    if (!is_prime(p)) {
        std::cerr << "error: --p must be prime, got " << p << '\n';
        return kInputError;
    }
    const auto rows = table1(p);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.order_independent; });
    if (as_json) {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back(json{{"spinning", r.label},
                                {"radii", r.radii},
                                {"H3", to_json(r.h3)},
                                {"H3_text", to_string(r.h3)},
                                {"orderings", r.permutations},
                                {"order_independent", r.order_independent}});
        }
        std::cout << json{{"schema", kSchemaVersion}, {"p", p}, {"rows", list}}.dump() << '\n';
    } else {
        std::cout << render_table1(rows, p);
    }
    return ok ? kOk : kMismatch;
}

int run_verify(const std::string& theorem, Int m, Int p, bool as_json) {
    const Theorem which = theorem == "main" ? Theorem::Main : Theorem::Main2;
    VerificationReport r;
    try {
        r = verify_theorem(which, m, p);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    if (as_json) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back(json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        std::cout << json{{"schema", kSchemaVersion},
                          {"theorem", theorem},
                          {"m", m},
                          {"p", p},
                          {"ok", r.ok},
                          {"expression", to_string(r.manifold.expr)},
                          {"homology", to_json(r.manifold.homology)},
                          {"checks", checks}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "theorem " << theorem << ", m = " << m << ", p = " << p << ": " << (r.ok ? "OK" : "MISMATCH")
                  << '\n'
                  << "  manifold: " << to_string(r.manifold.expr) << " (dimension " << r.manifold.dim << ")\n"
                  << indent(render_cases(r.manifold.homology, "H_i"), "    ");
        for (const auto& c : r.checks) {
            std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
        }
    }
    return r.ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, strong chirality and self-map degrees of constructed manifolds"};
    app.require_subcommand(1);

    Options opt;
    auto add_expr_command = [&](const char* name, const char* help, bool chiral_flag) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("expression", opt.expression, "DSL expression, or - to read one per line from stdin")
            ->required();
        cmd->add_flag("--json", opt.json, "emit JSON");
        if (chiral_flag) {
            cmd->add_option("--assert-chiral", opt.assert_chiral,
                            "record an externally proven strong-chirality fact with this citation");
        }
        return cmd;
    };
    CLI::App* eval = add_expr_command("eval", "homology, cohomology, Euler characteristic, pi1, validation", false);
    CLI::App* chirality = add_expr_command("chirality", "strong-chirality verdict with reason trace", true);
    CLI::App* degrees = add_expr_command("degrees", "degree set of self-maps", true);
    CLI::App* validate = add_expr_command("validate", "realizability check; exit 1 on violations", false);

    Int table_p = 0;
    bool table_json = false;
    CLI::App* table = app.add_subcommand("table1", "H_3 of all 7-dimensional iterated spinnings of N(p)");
    table->add_option("--p", table_p, "prime p")->required();
    table->add_flag("--json", table_json, "emit JSON");

    std::string theorem = "main";
    Int verify_m = 0;
    Int verify_p = 0;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "build and check a strongly chiral rational homology sphere");
    verify->add_option("--theorem", theorem, "main or main2")->check(CLI::IsMember({"main", "main2"}));
    verify->add_option("--m", verify_m, "m >= 0 (dimension 4m+3)")->required();
    verify->add_option("--p", verify_p, "prime p = 3 mod 4")->required();
    verify->add_flag("--json", verify_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (eval->parsed()) return for_each_expression(opt, run_eval);
    if (chirality->parsed()) return for_each_expression(opt, run_chirality);
    if (degrees->parsed()) return for_each_expression(opt, run_degrees);
    if (validate->parsed()) return for_each_expression(opt, run_validate);
    if (table->parsed()) return run_table1(table_p, table_json);
    if (verify->parsed()) return run_verify(theorem, verify_m, verify_p, verify_json);
    return kInputError;
}
