#include "pekt/verify.hpp"

#include "pekt/errors.hpp"
#include "pekt/jfunction.hpp"
#include "pekt/nu_parser.hpp"
#include "pekt/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pekt {

namespace {

CheckReport fail(std::string detail) { return {false, std::move(detail)}; }

std::string nu_label(const std::string& expr) { return "nu=" + expr; }

/// nu = sum_k c_k N_k for k <= 3 with small random non-zero rational coefficients.
std::string random_nu(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::bernoulli_distribution negative(0.5);
    std::string expr;
    for (unsigned k = 1; k <= 3; ++k) {
        const bool neg = negative(rng);
        if (expr.empty()) expr += neg ? "-" : "";
        else expr += neg ? " - " : " + ";
        expr += to_string(make_rational(num(rng), den(rng))) + "*N" + std::to_string(k);
    }
    return expr;
}

}  // namespace

const std::vector<std::string>& verification_names() {
    static const std::vector<std::string> names{
        "theorem", "corollary1", "finite-difference", "corollary2", "oracle",
        "schur-weyl", "orthogonality", "binomial", "positivity"};
    return names;
}

std::vector<NamedCheck> run_verification(const std::string& name, const VerifyOptions& opts) {
    if (name == "theorem") return verify_theorem(opts);
    if (name == "corollary1") return verify_corollary1(opts);
    if (name == "finite-difference") return verify_finite_difference(opts);
    if (name == "corollary2") return verify_corollary2(opts);
    if (name == "oracle") return verify_oracle(opts);
    if (name == "schur-weyl") return verify_schur_weyl(opts);
    if (name == "orthogonality") return verify_orthogonality(opts);
    if (name == "binomial") return verify_binomial(opts);
    if (name == "positivity") return verify_positivity(opts);
    throw DomainError("unknown verification '" + name + "'");
}

std::vector<NamedCheck> verify_theorem(const VerifyOptions& opts) {
    std::vector<std::string> inputs{"N1", "N2", "N1 + N2", "N1 + N2 + N3"};
    std::mt19937_64 rng(opts.seed);
    inputs.push_back(random_nu(rng));
    std::vector<NamedCheck> out;
    for (const auto& expr : inputs) {
        const LambdaElement probe = parse_nu(expr, 64, opts.q_order);
        const unsigned cap = opts.weight_cap.value_or(opts.n_max * probe.max_weight().value_or(1));
        const LambdaElement nu = parse_nu(expr, cap, opts.q_order);
        out.push_back({"theorem " + nu_label(expr) + " n_max=" + std::to_string(opts.n_max),
                       theorem_check(nu, opts.n_max, opts.q_order, cap, opts.eval)});
    }
    return out;
}

std::vector<NamedCheck> verify_corollary1(const VerifyOptions& opts) {
    const XSeries j = j_symmetrized(opts.n_max, opts.q_order, opts.eval);
    std::vector<NamedCheck> out;
    for (unsigned n = 0; n <= opts.n_max; ++n) {
        QSeries expected = QSeries::constant(1, opts.q_order);
        for (unsigned k = 2; k <= n; ++k) expected *= geometric(k, opts.q_order);
        if (n == 0) expected = one_minus_q_power(1, opts.q_order);
        CheckReport r;
        for (unsigned i = 0; i <= opts.q_order && r.passed; ++i)
            if (j.coeffs[n][i] != expected[i])
                r = fail("q^" + std::to_string(i) + ": " + to_string(j.coeffs[n][i]) + " vs " +
                         to_string(expected[i]));
        out.push_back({"corollary1 x^" + std::to_string(n), r});
    }
    return out;
}

std::vector<NamedCheck> verify_finite_difference(const VerifyOptions& opts) {
    const XSeries j = j_symmetrized(std::max(2u, opts.n_max), opts.q_order, opts.eval);
    const XSeries f = scale(j, geometric(1, opts.q_order));
    std::vector<NamedCheck> out;
    out.push_back({"finite-difference f=J_sym/(1-q)",
                   finite_difference_check(f, opts.n_max, opts.q_order)});
    const XSeries eq = substitute_over_one_minus_q(q_exponential(opts.q_order, opts.n_max));
    out.push_back({"finite-difference f=e_q(x/(1-q))",
                   finite_difference_check(eq, opts.n_max, opts.q_order)});
    return out;
}

std::vector<NamedCheck> verify_corollary2(const VerifyOptions& opts) {
    const std::vector<std::pair<Rational, unsigned>> cases{
        {Rational(1), 1}, {Rational(2), 1}, {Rational(3), 2}, {Rational(1, 2), 2}};
    std::vector<NamedCheck> out;
    for (const auto& [t, n] : cases)
        out.push_back({"corollary2 t=" + to_string(t) + " N=" + std::to_string(n),
                       j_gl_specialization(t, n, opts.q_order, opts.n_max)});
    return out;
}

std::vector<NamedCheck> verify_oracle(const VerifyOptions& opts) {
    const unsigned order = std::min(opts.q_order, kBruteForceMaxOrder);
    std::vector<NamedCheck> out;
    for (unsigned n = 1; n <= std::min(opts.n_max, kBruteForceMaxVars); ++n) {
        CheckReport r;
        Permutation perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
            const QSeries brute = brute_force_trace(perm, order);
            const QSeries formula = graded_trace(cycle_type_of(perm), Space::full, order);
            if (!(brute == formula)) {
                std::string p;
                for (unsigned v : perm) p += std::to_string(v);
                r = fail("permutation [" + p + "]: " + brute.to_string() + " vs " + formula.to_string());
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.push_back({"oracle S_" + std::to_string(n) + " q-order " + std::to_string(order), r});
    }
    return out;
}

std::vector<NamedCheck> verify_schur_weyl(const VerifyOptions& opts) {
    std::vector<NamedCheck> out;
    for (unsigned n = 1; n <= opts.n_max; ++n) {
        const CharacterTable table = character_table(n);
        CheckReport r;
        for (const auto& mu : table.classes()) {
            if (!(schur_weyl_lhs(mu, n) == schur_weyl_rhs(mu, n, table))) {
                r = fail("class " + mu.to_partition().to_string());
                break;
            }
        }
        out.push_back({"schur-weyl n=" + std::to_string(n), r});
    }
    return out;
}

std::vector<NamedCheck> verify_orthogonality(const VerifyOptions& opts) {
    std::vector<NamedCheck> out;
    for (unsigned n = 1; n <= opts.n_max; ++n) {
        const CharacterTable table = character_table(n);
        CheckReport r;
        const BigInt order = factorial(n);
        const std::size_t identity = table.class_index(CycleType(Partition(std::vector<unsigned>(n, 1u))));
        for (std::size_t a = 0; a < table.irreps().size() && r.passed; ++a) {
            if (table.value(a, identity) != hook_length_dimension(table.irreps()[a]))
                r = fail("dimension of " + table.irreps()[a].to_string());
            for (std::size_t b = 0; b < table.irreps().size() && r.passed; ++b) {
                BigInt sum = 0;
                for (std::size_t c = 0; c < table.classes().size(); ++c)
                    sum += class_size(table.classes()[c]) * table.value(a, c) * table.value(b, c);
                if (sum != (a == b ? order : BigInt(0)))
                    r = fail("rows " + table.irreps()[a].to_string() + ", " +
                             table.irreps()[b].to_string());
            }
        }
        out.push_back({"orthogonality n=" + std::to_string(n), r});
    }
    return out;
}

std::vector<NamedCheck> verify_binomial(const VerifyOptions& opts) {
    const std::vector<std::string> inputs{"N1", "N2", "N1 + N2"};
    std::vector<NamedCheck> out;
    for (const auto& a : inputs) {
        for (const auto& b : inputs) {
            for (unsigned n = 2; n <= opts.n_max; ++n) {
                const unsigned cap = opts.weight_cap.value_or(2 * n);
                const LambdaElement nu1 = parse_nu(a, cap, opts.q_order);
                const LambdaElement nu2 = parse_nu(b, cap, opts.q_order);
                out.push_back({"binomial nu'=" + a + " nu''=" + b + " n=" + std::to_string(n),
                               binomial_check(nu1, nu2, n, opts.q_order, cap, opts.eval)});
            }
        }
    }
    return out;
}

std::vector<NamedCheck> verify_positivity(const VerifyOptions& opts) {
    std::vector<NamedCheck> out;
    for (unsigned n = 2; n <= opts.n_max; ++n) {
        CheckReport r;
        try {
            for (unsigned m = 0; m <= opts.degree; ++m) module_decomposition(n, m);
        } catch (const Error& e) {
            r = fail(e.what());
        }
        out.push_back({"positivity n=" + std::to_string(n) + " degree<=" +
                           std::to_string(opts.degree),
                       r});
    }
    const QSeries trivial =
        multiplicity(graded_trace_function(3, Space::coxeter, opts.q_order), Partition{3});
    const QSeries expected = geometric(2, opts.q_order) * geometric(3, opts.q_order);
    out.push_back({"positivity trivial series n=3",
                   trivial == expected ? CheckReport{}
                                       : fail(trivial.to_string() + " vs " + expected.to_string())});
    return out;
}

}  // namespace pekt
