// scalerep: exact scaled number-structure workbench.
//
// Subcommands: eval, check, compose, gauge, wyz. Exit codes: 0 success/pass,
// 1 check failures, 2 usage or input errors.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scalerep/axiom.hpp"
#include "scalerep/gauge.hpp"
#include "scalerep/sequences.hpp"
#include "scalerep/term.hpp"

namespace {

using namespace scalerep;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SCALEREP_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

Environment parse_bindings(const std::vector<std::string>& binds) {
    Environment env;
    for (const std::string& b : binds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(0, "binding of the form name=value, got '" + b + "'");
        auto value = CRational::try_parse(std::string_view(b).substr(eq + 1));
        if (!value) throw ParseError(eq + 1, "value literal in binding '" + b + "'");
        env[b.substr(0, eq)] = *value;
    }
    return env;
}

struct EvalArgs {
    std::string expr;
    std::vector<std::string> binds;
    std::string structure = "rat:r=1";
    std::string view = "base";
};

int run_eval(const EvalArgs& args) {
    const TermPtr t = parse_term(args.expr);
    const StructureHandle s = StructureHandle::from_literal(args.structure);
    const Environment env = parse_bindings(args.binds);
    std::string out;
    if (args.view == "base")
        out = eval_base(t, env).str();
    else if (args.view == "external")
        out = eval_external(t, env, s).str();
    else if (args.view == "internal")
        out = eval_internal(t, env, s).internal().str();
    else
        throw ParseError(0, "view base | external | internal");
    std::cout << out << "\n";
    return 0;
}

struct CheckArgs {
    std::string suite;
    std::string structure;
    std::string sequence;
    int samples = 500;
    std::uint64_t seed = 0;
    bool json = false;
    std::vector<std::string> eps;
    std::int64_t cap = 1'000'000;
};

Rational real_scale_of(const StructureHandle& s) {
    if (s.type() != NumberType::Rational && s.type() != NumberType::Real)
        throw TypeMismatch("convergence suites need rat: or real: structures");
    return s.scale().re();
}

int run_check(const CheckArgs& args) {
    const StructureHandle s = StructureHandle::from_literal(args.structure);

    ConvergenceOptions conv = default_convergence_options();
    conv.index_cap = args.cap;
    if (!args.eps.empty()) {
        conv.eps_schedule.clear();
        for (const std::string& e : args.eps) conv.eps_schedule.push_back(Rational::parse(e));
    }

    CheckReport rep;
    if (args.suite == "field") {
        rep = run_field_suite(s, args.samples, args.seed);
    } else if (args.suite == "order") {
        rep = run_order_suite(s, args.samples, args.seed);
    } else if (args.suite == "nat") {
        rep = run_nat_suite(s, args.samples, args.seed);
    } else if (args.suite == "conj") {
        rep = run_conjugation_suite(s, args.samples, args.seed);
    } else if (args.suite == "sub") {
        if (s.type() != NumberType::Complex)
            throw TypeMismatch("substructure suite needs a cpx: structure");
        rep = run_substructure_suite(s.scale(), args.samples, args.seed);
    } else if (args.suite == "conv") {
        const auto seq = make_sequence(args.sequence.empty() ? "harmonic" : args.sequence);
        rep = run_convergence_check(*seq, real_scale_of(s), conv);
    } else if (args.suite == "limit") {
        const auto seq =
            make_sequence(args.sequence.empty() ? "one_plus_harmonic" : args.sequence);
        rep = run_limit_mapping(*seq, real_scale_of(s), conv);
    } else {
        throw ParseError(0, "suite field | order | nat | conj | sub | conv | limit");
    }

    std::cout << (args.json ? rep.to_json() : rep.summary()) << "\n";
    return rep.pass() ? 0 : 1;
}

int run_compose(const std::vector<std::string>& literals) {
    if (literals.size() < 2) throw ParseError(0, "at least two structure literals");
    StructureHandle acc = StructureHandle::from_literal(literals[0]);
    for (std::size_t i = 1; i < literals.size(); ++i) {
        const StructureHandle next = StructureHandle::from_literal(literals[i]);
        if (next.type() != acc.type())
            throw TypeMismatch("cannot compose " + acc.literal() + " with " + next.literal());
        acc = compose_scaling(acc, next.scale());
    }
    std::cout << acc.literal() << "\n";
    return 0;
}

struct WyzArgs {
    std::string w, y, z;
    int samples = 100;
    std::uint64_t seed = 0;
    bool json = false;
};

int run_wyz(const WyzArgs& args) {
    const CheckReport rep = run_wyz_control(CRational::parse(args.w), CRational::parse(args.y),
                                            CRational::parse(args.z), args.samples, args.seed);
    std::cout << (args.json ? rep.to_json() : rep.summary()) << "\n";
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scaled representations of number structures: exact evaluator, "
                 "axiom-equivalence checks and gauge-lattice demo"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a term in a chosen view");
    eval->add_option("--expr", eval_args.expr, "term, e.g. \"(2*x + 1)/y\"")->required();
    eval->add_option("--bind", eval_args.binds, "variable binding name=value (repeatable)");
    eval->add_option("--struct", eval_args.structure,
                     "structure literal, e.g. rat:r=3/2 or cpx:c=2+1i");
    eval->add_option("--view", eval_args.view, "base | external | internal");

    CheckArgs check_args;
    check_args.seed = default_seed();
    CLI::App* check = app.add_subcommand("check", "run an axiom-equivalence suite");
    check->add_option("--suite", check_args.suite, "field | order | nat | conj | sub | conv | limit")
        ->required();
    check->add_option("--struct", check_args.structure, "structure literal")->required();
    check->add_option("--samples", check_args.samples, "sampled bindings per axiom");
    check->add_option("--seed", check_args.seed, "sampler seed (default $SCALEREP_SEED or 0)");
    check->add_option("--seq", check_args.sequence,
                      "sequence for conv/limit: harmonic | one_plus_harmonic | alt_geom | "
                      "linear | const:<q>");
    check->add_option("--eps", check_args.eps, "epsilon schedule entries (repeatable)");
    check->add_option("--cap", check_args.cap, "index budget for conv/limit");
    check->add_flag("--json", check_args.json, "emit the JSON report");

    std::vector<std::string> compose_literals;
    CLI::App* compose = app.add_subcommand("compose", "compose scaling steps");
    compose->add_option("literals", compose_literals, "structure literals (same number type)")
        ->expected(-1);

    gauge::DemoConfig gauge_config;
    CLI::App* gauge_cmd = app.add_subcommand("gauge", "lattice covariant-derivative demo");
    gauge_cmd->add_option("--dims", gauge_config.dims, "1 or 2");
    gauge_cmd->add_option("--sites", gauge_config.sites, "sites per dimension (>= 2)");
    gauge_cmd->add_option("--dx", gauge_config.dx, "lattice spacing");
    gauge_cmd->add_option("--potential", gauge_config.potential,
                          "zero | const:<a> | sine:amp=<a>,period=<p>");
    gauge_cmd->add_option("--field", gauge_config.field, "const | linear | exp | transport");

    WyzArgs wyz_args;
    wyz_args.seed = default_seed();
    CLI::App* wyz = app.add_subcommand("wyz", "valuation-homogeneity negative control");
    wyz->add_option("--w", wyz_args.w, "multiplication scaling")->required();
    wyz->add_option("--y", wyz_args.y, "division scaling")->required();
    wyz->add_option("--z", wyz_args.z, "valuation scaling")->required();
    wyz->add_option("--samples", wyz_args.samples, "random terms to sample");
    wyz->add_option("--seed", wyz_args.seed, "sampler seed (default $SCALEREP_SEED or 0)");
    wyz->add_flag("--json", wyz_args.json, "emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_args);
        if (check->parsed()) return run_check(check_args);
        if (compose->parsed()) return run_compose(compose_literals);
        if (gauge_cmd->parsed()) {
            std::cout << gauge::run_demo_json(gauge_config) << "\n";
            return 0;
        }
        if (wyz->parsed()) return run_wyz(wyz_args);
    } catch (const scalerep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
