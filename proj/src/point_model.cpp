#include "pekt/point_model.hpp"

#include "parallel.hpp"
#include "pekt/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pekt {

QSeries graded_trace(const CycleType& mu, Space space, unsigned q_order) {
    QSeries t = QSeries::constant(1, q_order);
    for (auto [k, l] : mu.multiplicities()) t *= pow(geometric(k, q_order), l);
    if (space == Space::coxeter) t *= one_minus_q_power(1, q_order);
    return t;
}

ClassFunction graded_trace_function(unsigned n, Space space, unsigned q_order) {
    return ClassFunction::from(
        n, [&](const CycleType& mu) { return graded_trace(mu, space, q_order); });
}

namespace {

void count_fixed(std::span<const unsigned> perm, std::vector<unsigned>& e, unsigned slot,
                 unsigned degree, unsigned max_degree, std::vector<BigInt>& counts) {
    if (slot == e.size()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[perm[i]] != e[i]) return;
        ++counts[degree];
        return;
    }
    for (unsigned a = 0; degree + a <= max_degree; ++a) {
        e[slot] = a;
        count_fixed(perm, e, slot + 1, degree + a, max_degree, counts);
    }
    e[slot] = 0;
}

}  // namespace

QSeries brute_force_trace(std::span<const unsigned> perm, unsigned q_order, Space space) {
    if (perm.size() > kBruteForceMaxVars || q_order > kBruteForceMaxOrder)
        throw SizeLimitError("brute-force trace is limited to n <= " +
                             std::to_string(kBruteForceMaxVars) + ", q-order <= " +
                             std::to_string(kBruteForceMaxOrder));
    cycle_type_of(perm);  // validates
    std::vector<BigInt> counts(q_order + 1, 0);
    std::vector<unsigned> e(perm.size(), 0);
    count_fixed(perm, e, 0, 0, q_order, counts);
    QSeries t(q_order);
    for (unsigned m = 0; m <= q_order; ++m) t[m] = Rational(counts[m]);
    if (space == Space::coxeter) t *= one_minus_q_power(1, q_order);
    return t;
}

namespace {

/// Psi^r(nu) for r = 1..max_r, each at the given cap.
std::vector<LambdaElement> adams_table(const LambdaElement& nu, unsigned max_r, unsigned cap) {
    std::vector<LambdaElement> table;
    for (unsigned r = 1; r <= max_r; ++r) table.push_back(adams(r, nu, cap));
    return table;
}

LambdaElement one(unsigned cap, unsigned q_order, Algebra algebra) {
    return LambdaElement::constant(QSeries::constant(1, q_order), cap, algebra);
}

}  // namespace

LambdaElement correlator(const LambdaElement& nu, unsigned n, unsigned q_order,
                         unsigned weight_cap, Evaluation eval) {
    if (n < 2) throw DomainError("correlator needs n >= 2");
    const LambdaElement input = nu.q_order() > q_order ? nu.truncated_q(q_order) : nu;
    LambdaElement total(weight_cap, std::min(q_order, input.q_order()), nu.algebra());
    if (input.is_zero()) return total;

    const auto psi = adams_table(input, n, weight_cap);
    const auto classes = partitions(n);
    auto terms = detail::ordered_map<LambdaElement>(classes.size(), eval.threads, [&](std::size_t i) {
        const CycleType mu(classes[i]);
        LambdaElement term = one(weight_cap, total.q_order(), nu.algebra());
        for (auto [r, l] : mu.multiplicities()) term = term * pow(psi[r - 1], l);
        term *= graded_trace(mu, Space::coxeter, total.q_order());
        term *= make_rational(1, centralizer_size(mu));
        return term;
    });
    for (const auto& t : terms) total += t;
    return total;
}

LambdaElement correlator_mixed(const std::vector<InputGroup>& inputs, unsigned q_order,
                               unsigned weight_cap, Evaluation eval) {
    if (inputs.empty()) throw DomainError("correlator_mixed needs at least one input group");
    const Algebra algebra = inputs.front().nu.algebra();
    unsigned n = 0;
    unsigned order = q_order;
    for (const auto& g : inputs) {
        if (g.nu.algebra() != algebra)
            throw DomainError("input groups live in different lambda-algebras");
        n += g.multiplicity;
        order = std::min(order, g.nu.q_order());
    }
    if (n < 2) throw DomainError("correlator needs n >= 2");

    std::vector<std::vector<LambdaElement>> psi;
    std::vector<std::vector<Partition>> classes;
    for (const auto& g : inputs) {
        const LambdaElement nu = g.nu.truncated_q(order);
        psi.push_back(nu.is_zero() ? std::vector<LambdaElement>{}
                                   : adams_table(nu, g.multiplicity, weight_cap));
        classes.push_back(partitions(g.multiplicity));
    }

    LambdaElement total(weight_cap, order, algebra);
    // A group with nu = 0 and k >= 1 kills every term.
    for (std::size_t a = 0; a < inputs.size(); ++a)
        if (inputs[a].nu.is_zero() && inputs[a].multiplicity > 0) return total;

    // Enumerate tuples of cycle types in mixed-radix order.
    std::size_t count = 1;
    for (const auto& c : classes) count *= c.size();
    auto terms = detail::ordered_map<LambdaElement>(count, eval.threads, [&](std::size_t index) {
        LambdaElement term = one(weight_cap, order, algebra);
        CycleType joined;
        Rational weight = 1;
        for (std::size_t a = 0; a < classes.size(); ++a) {
            const CycleType mu(classes[a][index % classes[a].size()]);
            index /= classes[a].size();
            for (auto [r, l] : mu.multiplicities()) term = term * pow(psi[a][r - 1], l);
            weight /= Rational(centralizer_size(mu));
            joined = joined.join(mu);
        }
        term *= graded_trace(joined, Space::coxeter, order);
        term *= weight;
        return term;
    });
    for (const auto& t : terms) total += t;
    return total;
}

namespace {

std::string monomial_name(const Partition& mono, Algebra algebra) {
    if (mono.empty()) return "1";
    if (algebra == Algebra::rank_one) return "x^" + std::to_string(mono.size());
    std::string s;
    CycleType exps(mono);
    for (auto [k, e] : exps.multiplicities()) {
        if (!s.empty()) s += "*";
        s += "N" + std::to_string(k);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

CheckReport compare(const LambdaElement& lhs, const LambdaElement& rhs,
                    std::optional<unsigned> max_weight, std::optional<unsigned> q_order) {
    if (lhs.algebra() != rhs.algebra()) return {false, "elements live in different algebras"};
    const unsigned w = max_weight.value_or(std::min(lhs.weight_cap(), rhs.weight_cap()));
    const unsigned m = q_order.value_or(std::min(lhs.q_order(), rhs.q_order()));
    if (m > lhs.q_order() || m > rhs.q_order())
        return {false, "requested q-order exceeds an operand's truncation"};
    std::map<Partition, bool, GradedOrder> monomials;
    for (const auto& [mono, c] : lhs.terms()) monomials[mono];
    for (const auto& [mono, c] : rhs.terms()) monomials[mono];
    for (const auto& [mono, unused] : monomials) {
        if (mono.size() > w) break;
        const QSeries a = lhs.coefficient(mono);
        const QSeries b = rhs.coefficient(mono);
        for (unsigned i = 0; i <= m; ++i) {
            if (a[i] != b[i])
                return {false, "coefficient of " + monomial_name(mono, lhs.algebra()) + " at q^" +
                                   std::to_string(i) + ": " + to_string(a[i]) + " vs " +
                                   to_string(b[i])};
        }
    }
    return {};
}

CheckReport binomial_check(const LambdaElement& nu1, const LambdaElement& nu2, unsigned n,
                           unsigned q_order, unsigned weight_cap, Evaluation eval) {
    if (n > kBinomialMaxN)
        throw SizeLimitError("binomial check is limited to n <= " + std::to_string(kBinomialMaxN));
    const LambdaElement lhs = correlator(nu1 + nu2, n, q_order, weight_cap, eval);
    LambdaElement rhs(weight_cap, lhs.q_order(), lhs.algebra());
    for (unsigned k = 0; k <= n; ++k)
        rhs += correlator_mixed({{nu1, k}, {nu2, n - k}}, q_order, weight_cap, eval);
    return compare(lhs, rhs);
}

ClassFunction module_character(unsigned n, unsigned degree) {
    if (n < 1) throw DomainError("module_character needs n >= 1");
    return ClassFunction::from(n, [&](const CycleType& mu) {
        return QSeries::constant(graded_trace(mu, Space::coxeter, degree)[degree], 0);
    });
}

std::vector<std::pair<Partition, BigInt>> module_decomposition(unsigned n, unsigned degree) {
    const CharacterTable table = character_table(n);
    const ClassFunction f = module_character(n, degree);
    std::vector<std::pair<Partition, BigInt>> out;
    for (const auto& shape : table.irreps()) {
        const Rational m = multiplicity(f, shape, table)[0];
        if (!is_integer(m) || sgn(m) < 0)
            throw Error("multiplicity of " + shape.to_string() + " is " + to_string(m) +
                        ", not a non-negative integer");
        out.emplace_back(shape, m.get_num());
    }
    return out;
}

QSeries brute_force_invariant_series(unsigned n, unsigned q_order) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    QSeries total(q_order);
    do {
        total += brute_force_trace(perm, q_order, Space::coxeter);
    } while (std::next_permutation(perm.begin(), perm.end()));
    total *= make_rational(1, factorial(n));
    return total;
}

}  // namespace pekt
