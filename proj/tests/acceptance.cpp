// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include "pekt/characters.hpp"
#include "pekt/jfunction.hpp"
#include "pekt/point_model.hpp"
#include "pekt/sympoly.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

using namespace pekt;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& what) {
        if (passed) detail = what;
        passed = false;
    }
};

Evaluation evaluation() { return Evaluation{std::max(1u, std::thread::hardware_concurrency())}; }

LambdaElement N(unsigned k, unsigned cap, unsigned m) { return LambdaElement::generator(k, cap, m); }

// Number of ways to write each m <= order as a sum of the given parts.
QSeries restricted_partition_series(const std::vector<unsigned>& parts, unsigned order) {
    std::vector<BigInt> ways(order + 1, 0);
    ways[0] = 1;
    for (unsigned p : parts)
        for (unsigned m = p; m <= order; ++m) ways[m] += ways[m - p];
    std::vector<Rational> c(ways.begin(), ways.end());
    return QSeries(std::move(c), order);
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
    std::vector<unsigned> r;
    for (unsigned j = lo; j <= hi; ++j) r.push_back(j);
    return r;
}

// 1. Correlator sum against the closed exponential form.
Outcome theorem() {
    Outcome o;
    const unsigned m = 12, n_max = 5;
    const std::vector<std::pair<std::string, std::vector<unsigned>>> inputs{
        {"N1", {1}}, {"N2", {2}}, {"N1+N2", {1, 2}}, {"N1+N2+N3", {1, 2, 3}}};
    for (const auto& [name, gens] : inputs) {
        const unsigned cap = n_max * gens.back();
        LambdaElement nu(cap, m);
        for (unsigned k : gens) nu += N(k, cap, m);
        const JSeries lhs = j_by_correlators(nu, n_max, m, cap, evaluation());
        const JSeries rhs = j_closed(nu, m, cap);
        if (lhs.complete_weight < 5) o.fail(name + ": complete only to weight " + std::to_string(lhs.complete_weight));
        const CheckReport r = compare(lhs.value, rhs.value, 5u);
        if (!r.passed) o.fail(name + ": " + r.detail);
    }
    return o;
}

// 2. Rank-one coefficients against partitions into parts 2..n.
Outcome corollary1() {
    Outcome o;
    const unsigned m = 20, n_max = 8;
    const JSeries j = j_by_correlators(LambdaElement::rank_one_x(n_max, m), n_max, m, n_max, evaluation());
    const XSeries x = to_xseries(j.value, n_max);
    for (unsigned n = 2; n <= n_max; ++n) {
        const QSeries expected = restricted_partition_series(range(2, n), m);
        if (!(x.coeffs[n] == expected))
            o.fail("x^" + std::to_string(n) + ": " + x.coeffs[n].to_string() + " vs " + expected.to_string());
    }
    return o;
}

// 3. f(x) - f(qx) = x f(x) for f = J^sym / (1 - q).
Outcome finite_difference() {
    Outcome o;
    const unsigned m = 15, deg = 10;
    const JSeries j = j_by_correlators(LambdaElement::rank_one_x(deg, m), deg, m, deg, evaluation());
    const XSeries f = scale(to_xseries(j.value, deg), geometric(1, m));
    if (!(f.coeffs[0] == QSeries::constant(1, m))) o.fail("constant term " + f.coeffs[0].to_string());
    for (unsigned n = 1; n <= deg; ++n) {
        // [x^n]: f_n - q^n f_n - f_{n-1}
        const QSeries residual = f.coeffs[n] * one_minus_q_power(n, m) - f.coeffs[n - 1];
        if (!residual.is_zero()) o.fail("residual at x^" + std::to_string(n) + ": " + residual.to_string());
    }
    const CheckReport r = finite_difference_check(f, deg, m);
    if (!r.passed) o.fail(r.detail);
    return o;
}

// P = A^t for a series A in one variable with A_0 = 1:
// n P_n = sum_{k=1}^n ((t + 1) k - n) A_k P_{n-k}.
std::vector<QSeries> power_series_power(const std::vector<QSeries>& a, const Rational& t) {
    const unsigned m = a[0].order();
    std::vector<QSeries> p{QSeries::constant(1, m)};
    for (unsigned n = 1; n < a.size(); ++n) {
        QSeries acc(m);
        for (unsigned k = 1; k <= n; ++k)
            acc += a[k] * p[n - k] * Rational((t + 1) * k - n);
        p.push_back(acc * Rational(1, n));
    }
    return p;
}

// 4. GL_N specialization against (1-q) prod_i e_q(x_i/(1-q))^t.
Outcome corollary2() {
    Outcome o;
    const unsigned m = 10, deg = 4;
    const std::vector<std::pair<Rational, unsigned>> cases{
        {Rational(1), 1}, {Rational(2), 1}, {Rational(3), 2}, {Rational(1, 2), 2}};
    for (const auto& [t, vars] : cases) {
        const std::string label = "t=" + to_string(t) + ", N=" + std::to_string(vars);

        // e_q(y/(1-q)) has y^n coefficient 1/((1-q)...(1-q^n)).
        std::vector<QSeries> eq;
        for (unsigned n = 0; n <= deg; ++n) eq.push_back(restricted_partition_series(range(1, n), m));
        const std::vector<QSeries> g = power_series_power(eq, t);

        std::map<std::vector<unsigned>, QSeries> product{{std::vector<unsigned>(vars, 0), one_minus_q_power(1, m)}};
        for (unsigned i = 0; i < vars; ++i) {
            std::map<std::vector<unsigned>, QSeries> next;
            for (const auto& [e, c] : product) {
                const unsigned used = std::accumulate(e.begin(), e.end(), 0u);
                for (unsigned d = 0; used + d <= deg; ++d) {
                    auto f = e;
                    f[i] = d;
                    auto [it, fresh] = next.try_emplace(f, QSeries(m));
                    it->second += c * g[d];
                }
            }
            product = std::move(next);
        }

        const LambdaElement nu = N(1, deg, m) * t;
        const SeriesPolyN lhs = specialize_series(j_closed(nu, m, deg).value, vars);
        for (const auto& [e, c] : lhs.terms())
            if (!product.count(e)) o.fail(label + ": unexpected monomial of degree " + std::to_string(std::accumulate(e.begin(), e.end(), 0u)));
        for (const auto& [e, c] : product) {
            const QSeries got = lhs.coefficient(e, QSeries(m));
            if (!(got == c)) o.fail(label + ": " + got.to_string() + " vs " + c.to_string());
        }
        const CheckReport r = j_gl_specialization(t, vars, m, deg);
        if (!r.passed) o.fail(label + ": " + r.detail);
    }
    return o;
}

// 5. Fixed-monomial counts against the product formula, every permutation.
Outcome oracle() {
    Outcome o;
    const unsigned m = 8;
    for (unsigned n = 1; n <= 5; ++n) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0u);
        do {
            const CycleType mu = cycle_type_of(p);
            QSeries product = QSeries::constant(1, m);
            const Partition shape = mu.to_partition();
            for (unsigned part : shape.parts()) product *= restricted_partition_series({part}, m);
            const QSeries brute = brute_force_trace(p, m);
            if (!(brute == product)) o.fail(mu.to_partition().to_string() + ": brute force " + brute.to_string());
            if (!(graded_trace(mu, Space::full, m) == product))
                o.fail(mu.to_partition().to_string() + ": product formula");
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return o;
}

// 6. prod N_r^{l_r} = sum_D chi_D(mu) s_D in n variables.
Outcome schur_weyl() {
    Outcome o;
    for (unsigned n = 1; n <= 5; ++n) {
        const CharacterTable table = character_table(n);
        for (const auto& mu : table.classes()) {
            const SymPolyN lhs = schur_weyl_lhs(mu, n);
            const SymPolyN rhs = schur_weyl_rhs(mu, n, table);
            if (!((lhs - rhs).is_zero())) o.fail("cycle type " + mu.to_partition().to_string());
        }
    }
    return o;
}

// Standard Young tableaux of a shape, by removing corners.
BigInt count_tableaux(std::vector<unsigned> shape, std::map<std::vector<unsigned>, BigInt>& memo) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;
        auto smaller = shape;
        --smaller[i];
        total += count_tableaux(smaller, memo);
    }
    memo.emplace(shape, total);
    return total;
}

// 7. Row orthogonality with class-size weights, and dimensions.
Outcome orthogonality() {
    Outcome o;
    std::map<std::vector<unsigned>, BigInt> memo;
    for (unsigned n = 1; n <= 8; ++n) {
        const CharacterTable t = character_table(n);
        const BigInt order = factorial(n);
        const std::size_t id = t.class_index(CycleType(Partition(std::vector<unsigned>(n, 1u))));
        for (std::size_t i = 0; i < t.irreps().size(); ++i) {
            const Partition& shape = t.irreps()[i];
            const BigInt dim = t.value(i, id);
            if (dim != hook_length_dimension(shape) || dim != count_tableaux(shape.parts(), memo))
                o.fail("dimension of " + shape.to_string());
            for (std::size_t j = 0; j < t.irreps().size(); ++j) {
                BigInt sum = 0;
                for (std::size_t c = 0; c < t.classes().size(); ++c)
                    sum += class_size(t.classes()[c]) * t.value(i, c) * t.value(j, c);
                if (sum != (i == j ? order : BigInt(0)))
                    o.fail("rows " + shape.to_string() + ", " + t.irreps()[j].to_string() + " at n=" +
                           std::to_string(n));
            }
        }
    }
    return o;
}

// 8. Equivariant binomial identity on all ordered pairs.
Outcome binomial() {
    Outcome o;
    const unsigned m = 12;
    for (unsigned n = 2; n <= 5; ++n) {
        const unsigned cap = 2 * n;
        const std::vector<std::pair<std::string, LambdaElement>> inputs{
            {"N1", N(1, cap, m)}, {"N2", N(2, cap, m)}, {"N1+N2", N(1, cap, m) + N(2, cap, m)}};
        for (const auto& [a, nu1] : inputs)
            for (const auto& [b, nu2] : inputs) {
                const CheckReport r = binomial_check(nu1, nu2, n, m, cap, evaluation());
                if (!r.passed) o.fail(a + ", " + b + " at n=" + std::to_string(n) + ": " + r.detail);
            }
    }
    return o;
}

// 9. Integral non-negative multiplicities; trivial-isotypic series at n = 3.
Outcome positivity() {
    Outcome o;
    for (unsigned n = 1; n <= 5; ++n) {
        const CharacterTable table = character_table(n);
        for (unsigned deg = 0; deg <= 6; ++deg) {
            const ClassFunction chi = module_character(n, deg);
            for (const auto& shape : table.irreps()) {
                const QSeries mult = multiplicity(chi, shape, table);
                const Rational& c = mult[0];
                if (sgn(c) < 0 || !is_integer(c))
                    o.fail(shape.to_string() + " in degree " + std::to_string(deg) + ": " + to_string(c));
            }
            for (const auto& [shape, mult] : module_decomposition(n, deg))
                if (mult < 0) o.fail("decomposition of degree " + std::to_string(deg));
        }
    }
    const unsigned m = 12;
    const QSeries trivial = multiplicity(graded_trace_function(3, Space::coxeter, m), Partition{3});
    const QSeries expected = restricted_partition_series({2, 3}, m);
    if (!(trivial == expected)) o.fail("trivial series at n=3: " + trivial.to_string());
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"theorem reproduction", theorem},
        {"rank-one coefficients", corollary1},
        {"finite-difference equation", finite_difference},
        {"GL_N specialization", corollary2},
        {"oracle equivalence", oracle},
        {"Schur-Weyl identity", schur_weyl},
        {"character-table soundness", orthogonality},
        {"equivariant binomial identity", binomial},
        {"module-decomposition positivity", positivity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::printf("%s %zu %s (%.3f s)", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    elapsed.count());
        if (!outcome.passed) std::printf(": %s", outcome.detail.c_str());
        std::printf("\n");
        failures += outcome.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
