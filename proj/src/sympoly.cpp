#include "pekt/sympoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pekt {

SymPolyN make_symmetric(unsigned num_vars, const SymPolyN::Terms& terms) {
    SymPolyN p(num_vars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    if (!p.is_symmetric()) throw DomainError("polynomial is not symmetric in its variables");
    return p;
}

SymPolyN constant_poly(unsigned num_vars, const Rational& c) {
    SymPolyN p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

SymPolyN power_sum(unsigned k, unsigned num_vars) {
    SymPolyN p(num_vars);
    for (unsigned i = 0; i < num_vars; ++i) {
        Exponents e(num_vars, 0);
        e[i] = k;
        p.add_term(e, 1);
    }
    return p;
}

namespace {

void compositions(unsigned total, unsigned slot, Exponents& e, SymPolyN& out) {
    if (slot + 1 == e.size()) {
        e[slot] = total;
        out.add_term(e, 1);
        return;
    }
    for (unsigned a = 0; a <= total; ++a) {
        e[slot] = a;
        compositions(total - a, slot + 1, e, out);
    }
}

}  // namespace

SymPolyN complete_homogeneous(unsigned k, unsigned num_vars) {
    SymPolyN p(num_vars);
    if (num_vars == 0) {
        if (k == 0) p = constant_poly(0, 1);
        return p;
    }
    Exponents e(num_vars, 0);
    compositions(k, 0, e, p);
    return p;
}

SymPolyN pow(const SymPolyN& p, unsigned e) {
    SymPolyN result = constant_poly(p.num_vars(), 1);
    for (unsigned i = 0; i < e; ++i) result = result * p;
    return result;
}

SymPolyN specialize_monomial(const Partition& monomial, Algebra algebra, unsigned num_vars) {
    if (num_vars == 0) throw DomainError("specialization needs at least one variable");
    if (algebra == Algebra::rank_one) {
        if (num_vars != 1) throw DomainError("the rank-one algebra specializes to one variable");
        SymPolyN p(1);
        p.add_term(Exponents{monomial.size()}, 1);
        return p;
    }
    SymPolyN p = constant_poly(num_vars, 1);
    for (unsigned k : monomial.parts()) p = p * power_sum(k, num_vars);
    return p;
}

SymPolyN specialize(const LambdaElement& a, unsigned num_vars, unsigned q_power) {
    if (q_power > a.q_order()) throw DomainError("q-slice beyond the truncation order");
    SymPolyN out(num_vars);
    for (const auto& [mono, c] : a.terms()) {
        if (sgn(c[q_power]) == 0) continue;
        SymPolyN term = specialize_monomial(mono, a.algebra(), num_vars);
        out += term.scale(c[q_power]);
    }
    return out;
}

SymPolyN specialize(const LambdaElement& a, unsigned num_vars) {
    for (const auto& [mono, c] : a.terms())
        for (unsigned i = 1; i <= c.order(); ++i)
            if (sgn(c[i]) != 0) throw DomainError("element has q-dependent coefficients");
    return specialize(a, num_vars, 0);
}

SeriesPolyN specialize_series(const LambdaElement& a, unsigned num_vars) {
    SeriesPolyN out(num_vars);
    for (const auto& [mono, c] : a.terms()) {
        SymPolyN term = specialize_monomial(mono, a.algebra(), num_vars);
        for (const auto& [e, r] : term.terms()) out.add_term(e, c * r);
    }
    return out;
}

namespace {

// Laplace expansion along rows; the minor is identified by the set of
// columns already used, which also fixes the current row.
class Determinant {
public:
    explicit Determinant(std::vector<std::vector<SymPolyN>> m) : m_(std::move(m)) {}

    SymPolyN operator()() { return minor(0); }

private:
    SymPolyN minor(unsigned used) {
        const unsigned size = static_cast<unsigned>(m_.size());
        const unsigned row = static_cast<unsigned>(std::popcount(used));
        const unsigned vars = m_[0][0].num_vars();
        if (row == size) return constant_poly(vars, 1);
        if (auto it = memo_.find(used); it != memo_.end()) return it->second;
        SymPolyN total(vars);
        int sign = 1;
        for (unsigned col = 0; col < size; ++col) {
            if (used & (1u << col)) continue;
            if (!m_[row][col].is_zero()) {
                SymPolyN term = m_[row][col] * minor(used | (1u << col));
                if (sign > 0) total += term;
                else total -= term;
            }
            sign = -sign;
        }
        memo_.emplace(used, total);
        return total;
    }

    std::vector<std::vector<SymPolyN>> m_;
    std::map<unsigned, SymPolyN> memo_;
};

SymPolyN alternant(const Exponents& alpha) {
    const unsigned n = static_cast<unsigned>(alpha.size());
    std::vector<unsigned> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0u);
    SymPolyN out(n);
    do {
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        Exponents e(n, 0);
        for (unsigned i = 0; i < n; ++i) e[sigma[i]] = alpha[i];
        out.add_term(e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

// Exact division by (x_i - x_j): repeatedly clear a term of top x_i-degree.
SymPolyN divide_by_difference(SymPolyN p, unsigned i, unsigned j) {
    SymPolyN quotient(p.num_vars());
    while (!p.is_zero()) {
        auto top = std::max_element(p.terms().begin(), p.terms().end(),
                                    [i](const auto& a, const auto& b) {
                                        return a.first[i] < b.first[i];
                                    });
        Exponents e = top->first;
        const Rational c = top->second;
        if (e[i] == 0) throw DomainError("alternant is not divisible by x_i - x_j");
        e[i] -= 1;
        quotient.add_term(e, c);
        Exponents lead = e;
        lead[i] += 1;
        p.add_term(lead, -c);
        e[j] += 1;
        p.add_term(e, c);
    }
    return quotient;
}

}  // namespace

SymPolyN schur(const Partition& shape, unsigned num_vars) {
    if (shape.length() > num_vars)
        throw DomainError("Schur polynomial " + shape.to_string() + " needs at most " +
                          std::to_string(num_vars) + " rows");
    const unsigned len = static_cast<unsigned>(shape.length());
    if (len == 0) return constant_poly(num_vars, 1);
    std::vector<std::vector<SymPolyN>> m(len, std::vector<SymPolyN>(len, SymPolyN(num_vars)));
    for (unsigned r = 0; r < len; ++r) {
        for (unsigned c = 0; c < len; ++c) {
            const int k = static_cast<int>(shape[r]) - static_cast<int>(r) + static_cast<int>(c);
            if (k >= 0) m[r][c] = complete_homogeneous(static_cast<unsigned>(k), num_vars);
        }
    }
    return Determinant(std::move(m))();
}

SymPolyN schur_bialternant(const Partition& shape, unsigned num_vars) {
    if (shape.length() > num_vars)
        throw DomainError("Schur polynomial " + shape.to_string() + " needs at most " +
                          std::to_string(num_vars) + " rows");
    Exponents alpha(num_vars);
    for (unsigned i = 0; i < num_vars; ++i)
        alpha[i] = (i < shape.length() ? shape[i] : 0) + (num_vars - 1 - i);
    SymPolyN p = alternant(alpha);
    for (unsigned i = 0; i < num_vars; ++i)
        for (unsigned j = i + 1; j < num_vars; ++j) p = divide_by_difference(std::move(p), i, j);
    return p;
}

SymPolyN schur_weyl_lhs(const CycleType& mu, unsigned num_vars) {
    SymPolyN p = constant_poly(num_vars, 1);
    for (auto [r, l] : mu.multiplicities()) p = p * pow(power_sum(r, num_vars), l);
    return p;
}

SymPolyN schur_weyl_rhs(const CycleType& mu, unsigned num_vars, const CharacterTable& table) {
    if (table.n() != mu.size()) throw DomainError("character table is for a different n");
    const std::size_t cls = table.class_index(mu);
    SymPolyN total(num_vars);
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
        const Partition& shape = table.irreps()[i];
        if (shape.length() > num_vars) continue;
        const BigInt& chi = table.value(i, cls);
        if (chi == 0) continue;
        total += schur(shape, num_vars).scale(Rational(chi));
    }
    return total;
}

std::string to_string(const SymPolyN& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) s += "-";
        Rational mag = abs(c);
        bool any = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (any) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            any = true;
        }
        if (!any) s += to_string(mag);
        else if (mag == 1) s += mono;
        else s += to_string(mag) + "*" + mono;
    }
    return s;
}

}  // namespace pekt
