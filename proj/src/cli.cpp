#include "pekt/cli.hpp"

#include "CLI11.hpp"
#include "pekt/errors.hpp"
#include "pekt/json_io.hpp"
#include "pekt/nu_parser.hpp"
#include "pekt/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace pekt::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    unsigned n = 3;
    unsigned n_max = 5;
    unsigned q_order = 12;
    unsigned weight_cap = 6;
    std::optional<unsigned> degree;
    std::string nu = "N1";
    std::string format = "json";
    std::string space = "coxeter";
    std::string mode = "by_correlators";
    std::string cycle_type;
    std::string perm;
    bool brute_force = false;
    std::uint64_t seed = 1;
    std::string check;
};

unsigned threads_from_env() {
    const char* v = std::getenv("THREADS");
    if (!v || !*v) return 1;
    try {
        return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
        throw UsageError(std::string("THREADS must be a non-negative integer, got '") + v + "'");
    }
}

LambdaElement nu_from(const Config& c) {
    try {
        return parse_nu(c.nu, c.weight_cap, c.q_order);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--nu: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("--nu: ") + e.what());
    }
}

std::vector<unsigned> parse_list(const std::string& text, const char* flag) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(static_cast<unsigned>(std::stoul(item, &used)));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": expected comma-separated integers");
        }
    }
    return out;
}

Space space_from(const std::string& s) { return s == "full" ? Space::full : Space::coxeter; }

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_classes(const Config& c, std::ostream& out) {
    const auto parts = partitions(c.n);
    if (c.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : parts)
            arr.push_back({{"partition", p.parts()}, {"class_size", class_size(CycleType(p)).get_str()}});
        emit(out, {{"n", c.n}, {"classes", arr}});
    } else {
        const char* sep = c.format == "csv" ? "," : "  ";
        if (c.format == "csv") out << "partition,class_size\n";
        for (const auto& p : parts)
            out << (c.format == "csv" ? "\"" + p.to_string() + "\"" : p.to_string()) << sep
                << class_size(CycleType(p)).get_str() << "\n";
    }
    return kSuccess;
}

int cmd_characters(const Config& c, std::ostream& out) {
    const CharacterTable t = character_table(c.n);
    if (c.format == "json") {
        emit(out, to_json(t));
    } else if (c.format == "csv") {
        out << to_csv(t);
    } else {
        for (std::size_t i = 0; i < t.irreps().size(); ++i) {
            out << t.irreps()[i].to_string() << ":";
            for (const auto& v : t.values()[i]) out << " " << v.get_str();
            out << "\n";
        }
    }
    return kSuccess;
}

int cmd_trace(const Config& c, std::ostream& out) {
    if (c.cycle_type.empty() == c.perm.empty())
        throw UsageError("trace: give exactly one of --cycle-type or --perm");
    const Space space = space_from(c.space);
    CycleType mu;
    QSeries t;
    if (!c.perm.empty()) {
        const Permutation perm = parse_list(c.perm, "--perm");
        try {
            mu = cycle_type_of(perm);
        } catch (const DomainError& e) {
            throw UsageError(std::string("--perm: ") + e.what());
        }
        t = c.brute_force ? brute_force_trace(perm, c.q_order, space)
                          : graded_trace(mu, space, c.q_order);
    } else {
        mu = CycleType(Partition(parse_list(c.cycle_type, "--cycle-type")));
        if (c.brute_force) {
            const auto perms = permutations_of_type(mu);
            t = brute_force_trace(perms.front(), c.q_order, space);
        } else {
            t = graded_trace(mu, space, c.q_order);
        }
    }
    if (c.format == "json") {
        emit(out, {{"cycle_type", mu.to_partition().parts()},
                   {"space", c.space},
                   {"method", c.brute_force ? "brute_force" : "product_formula"},
                   {"q_order", t.order()},
                   {"coefficients", t.to_strings()}});
    } else {
        out << t.to_string() << "\n";
    }
    return kSuccess;
}

int cmd_correlator(const Config& c, std::ostream& out, Evaluation eval) {
    const LambdaElement nu = nu_from(c);
    const LambdaElement value = correlator(nu, c.n, c.q_order, c.weight_cap, eval);
    if (c.format == "json") {
        emit(out, {{"n", c.n},
                   {"nu", c.nu},
                   {"algebra", to_string(value.algebra())},
                   {"q_order", value.q_order()},
                   {"weight_cap", value.weight_cap()},
                   {"terms", to_json(value)}});
    } else {
        out << value.to_string() << "\n";
    }
    return kSuccess;
}

int cmd_module_decompose(const Config& c, std::ostream& out) {
    auto rows = nlohmann::ordered_json::array();
    if (c.degree) {
        for (const auto& [shape, mult] : module_decomposition(c.n, *c.degree))
            rows.push_back({{"irrep", shape.parts()}, {"multiplicity", mult.get_str()}});
    } else {
        const CharacterTable table = character_table(c.n);
        const ClassFunction f = graded_trace_function(c.n, Space::coxeter, c.q_order);
        for (const auto& shape : table.irreps())
            rows.push_back({{"irrep", shape.parts()},
                            {"multiplicity_series", multiplicity(f, shape, table).to_strings()}});
    }
    if (c.format == "json") {
        nlohmann::ordered_json j{{"n", c.n}};
        if (c.degree) j["degree"] = *c.degree;
        else j["q_order"] = c.q_order;
        j["irreps"] = std::move(rows);
        emit(out, j);
    } else {
        for (const auto& r : rows) out << r.dump() << "\n";
    }
    return kSuccess;
}

int cmd_jfunction(const Config& c, std::ostream& out, Evaluation eval) {
    const LambdaElement nu = nu_from(c);
    JSeries j = c.mode == "closed_form" ? j_closed(nu, c.q_order, c.weight_cap)
                                        : j_by_correlators(nu, c.n_max, c.q_order, c.weight_cap, eval);
    if (c.format == "json") emit(out, to_json(j));
    else out << j.value.truncated_weight(j.complete_weight).to_string() << "\n";
    return kSuccess;
}

int cmd_verify(const Config& c, const CLI::App& sub, std::ostream& out, Evaluation eval) {
    VerifyOptions opts;
    opts.n_max = c.n_max;
    opts.q_order = c.q_order;
    if (sub.count("--weight-cap")) opts.weight_cap = c.weight_cap;
    if (c.degree) opts.degree = *c.degree;
    opts.seed = c.seed;
    opts.eval = eval;

    std::vector<std::string> names;
    if (c.check == "all") names = verification_names();
    else names.push_back(c.check);

    bool all_passed = true;
    for (const auto& name : names) {
        for (const auto& check : run_verification(name, opts)) {
            all_passed &= check.report.passed;
            out << (check.report.passed ? "PASS " : "FAIL ") << check.name;
            if (!check.report.passed) out << ": " << check.report.detail;
            out << "\n";
        }
    }
    return all_passed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation-equivariant K-theoretic correlators of the point"};
    app.name("pekt");
    app.require_subcommand(1);
    Config c;

    const std::vector<std::string> formats{"json", "csv", "text"};
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    };
    auto add_q = [&](CLI::App* s) {
        s->add_option("--q-order,-M", c.q_order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    };
    auto add_w = [&](CLI::App* s) {
        s->add_option("--weight-cap,-W", c.weight_cap, "Lambda-weight truncation")->check(CLI::PositiveNumber);
    };

    auto* classes = app.add_subcommand("classes", "Conjugacy classes of S_n and their sizes");
    classes->add_option("--n", c.n, "Symmetric group degree")->required();
    add_format(classes);

    auto* characters = app.add_subcommand("characters", "Character table of S_n");
    characters->add_option("--n", c.n, "Symmetric group degree")->required();
    add_format(characters);

    auto* trace = app.add_subcommand("trace", "Graded trace of a permutation on polynomial functions");
    trace->add_option("--cycle-type", c.cycle_type, "Cycle type, e.g. 2,1");
    trace->add_option("--perm", c.perm, "Permutation as 0-based images, e.g. 1,0,2");
    trace->add_option("--space", c.space, "full or coxeter")->check(CLI::IsMember({"full", "coxeter"}));
    trace->add_flag("--brute-force", c.brute_force, "Count fixed monomials instead of the product formula");
    add_q(trace);
    add_format(trace);

    auto* corr = app.add_subcommand("correlator", "S_n-invariant correlator <nu,...,nu,1/(1-qL)>");
    corr->add_option("--n", c.n, "Number of nu inputs (>= 2)")->required();
    corr->add_option("--nu", c.nu, "Input, e.g. \"N1 + 1/2*N2\" or \"x\"");
    add_q(corr);
    add_w(corr);
    add_format(corr);

    auto* decompose = app.add_subcommand("module-decompose",
                                         "Irreducible decomposition of polynomials on the Coxeter space");
    decompose->add_option("--n", c.n, "Symmetric group degree")->required();
    decompose->add_option("--degree", c.degree, "Polynomial degree m; omit for generating series");
    add_q(decompose);
    add_format(decompose);

    auto* jfun = app.add_subcommand("jfunction", "Small J-function of the point");
    jfun->add_option("--nu", c.nu, "Input, e.g. \"N1\" or \"x\"");
    jfun->add_option("--mode", c.mode, "by_correlators or closed_form")
        ->check(CLI::IsMember({"by_correlators", "closed_form"}));
    jfun->add_option("--n-max", c.n_max, "Largest correlator size")->check(CLI::Range(2u, 64u));
    add_q(jfun);
    add_w(jfun);
    add_format(jfun);

    auto* verify = app.add_subcommand("verify", "Exact verification of the closed-form identities");
    std::vector<std::string> checks = verification_names();
    checks.push_back("all");
    verify->add_option("check", c.check, "Which verification to run")->required()->check(CLI::IsMember(checks));
    verify->add_option("--n-max", c.n_max, "Size bound of the check")->check(CLI::PositiveNumber);
    verify->add_option("--degree", c.degree, "Largest module degree (positivity)");
    verify->add_option("--seed", c.seed, "Seed for randomized inputs");
    add_q(verify);
    add_w(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        const Evaluation eval{threads_from_env()};
        if (*classes) return cmd_classes(c, out);
        if (*characters) return cmd_characters(c, out);
        if (*trace) return cmd_trace(c, out);
        if (*corr) return cmd_correlator(c, out, eval);
        if (*decompose) return cmd_module_decompose(c, out);
        if (*jfun) return cmd_jfunction(c, out, eval);
        if (*verify) return cmd_verify(c, *verify, out, eval);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kComputationError;
    }
    return kUsageError;
}

}  // namespace pekt::cli
