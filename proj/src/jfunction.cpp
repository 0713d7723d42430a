#include "pekt/jfunction.hpp"

#include "pekt/errors.hpp"

#include <algorithm>
#include <map>

namespace pekt {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::by_correlators: return "by_correlators";
        case Provenance::closed_form: return "closed_form";
        case Provenance::symmetrized: return "symmetrized";
        case Provenance::gl_specialization: return "gl_specialization";
    }
    return "unknown";
}

namespace {

LambdaElement one_minus_q(unsigned weight_cap, unsigned q_order, Algebra algebra) {
    return LambdaElement::constant(one_minus_q_power(1, q_order), weight_cap, algebra);
}

}  // namespace

JSeries j_by_correlators(const LambdaElement& nu, unsigned n_max, unsigned q_order,
                         unsigned weight_cap, Evaluation eval) {
    if (n_max < 2) throw DomainError("j_by_correlators needs n_max >= 2");
    const LambdaElement input = nu.q_order() > q_order ? nu.truncated_q(q_order) : nu;
    LambdaElement j = one_minus_q(weight_cap, input.q_order(), nu.algebra());
    j += input.with_weight_cap(weight_cap);
    for (unsigned n = 2; n <= n_max; ++n) j += correlator(input, n, q_order, weight_cap, eval);

    unsigned complete = weight_cap;
    if (auto w = input.min_weight()) {
        if (*w == 0) throw DomainError("nu must have zero weight-0 part");
        complete = std::min(weight_cap, n_max * *w);
    }
    return {std::move(j), complete, Provenance::by_correlators};
}

JSeries j_closed(const LambdaElement& nu, unsigned q_order, unsigned weight_cap) {
    if (auto w = nu.min_weight(); w && *w == 0)
        throw DomainError("j_closed: nu must have zero weight-0 part");
    const LambdaElement input = nu.q_order() > q_order ? nu.truncated_q(q_order) : nu;
    const unsigned m = input.q_order();
    LambdaElement exponent(weight_cap, m, nu.algebra());
    for (unsigned k = 1; k <= weight_cap; ++k) {
        // Parts of nu heavier than W/k only reach weight > W after Psi^k.
        const LambdaElement light = input.truncated_weight(weight_cap / k);
        if (light.is_zero()) continue;
        LambdaElement term = adams(k, light, weight_cap);
        term *= geometric(k, m);
        term *= Rational(1, k);
        exponent += term;
    }
    LambdaElement j = exp(exponent);
    j *= one_minus_q_power(1, m);
    return {std::move(j), weight_cap, Provenance::closed_form};
}

unsigned XSeries::q_order() const {
    unsigned m = coeffs.front().order();
    for (const auto& c : coeffs) m = std::min(m, c.order());
    return m;
}

XSeries q_exponential(unsigned q_order, unsigned deg_cap) {
    XSeries e;
    for (unsigned n = 0; n <= deg_cap; ++n) e.coeffs.push_back(invert(q_factorial(n, q_order)));
    return e;
}

XSeries substitute_over_one_minus_q(const XSeries& f) {
    const unsigned m = f.q_order();
    const QSeries g = geometric(1, m);
    XSeries out;
    QSeries factor = QSeries::constant(1, m);
    for (const auto& c : f.coeffs) {
        out.coeffs.push_back(c * factor);
        factor *= g;
    }
    return out;
}

// Same recurrences as the scalar exp/log, with x as the series variable:
//   n e_n = sum_{j=1}^n j a_j e_{n-j},  n l_n = n a_n - sum_{j=1}^{n-1} j l_j a_{n-j}.
XSeries xseries_exp(const XSeries& a) {
    const unsigned m = a.q_order();
    if (!a.coeffs.front().truncated(m).is_zero())
        throw DomainError("xseries_exp: constant term must be zero");
    XSeries e;
    e.coeffs.push_back(QSeries::constant(1, m));
    for (unsigned n = 1; n <= a.degree_cap(); ++n) {
        QSeries acc(m);
        for (unsigned j = 1; j <= n; ++j) acc += (a.coeffs[j] * e.coeffs[n - j]) * Rational(j);
        e.coeffs.push_back(acc * Rational(1, n));
    }
    return e;
}

XSeries xseries_log(const XSeries& a) {
    const unsigned m = a.q_order();
    if (!(a.coeffs.front().truncated(m) == QSeries::constant(1, m)))
        throw DomainError("xseries_log: constant term must be 1");
    XSeries l;
    l.coeffs.push_back(QSeries(m));
    for (unsigned n = 1; n <= a.degree_cap(); ++n) {
        QSeries acc = a.coeffs[n].truncated(m) * Rational(n);
        for (unsigned j = 1; j < n; ++j) acc -= (l.coeffs[j] * a.coeffs[n - j]) * Rational(j);
        l.coeffs.push_back(acc * Rational(1, n));
    }
    return l;
}

XSeries scale(const XSeries& f, const QSeries& c) {
    XSeries out;
    for (const auto& x : f.coeffs) out.coeffs.push_back(x * c);
    return out;
}

XSeries scale(const XSeries& f, const Rational& c) {
    XSeries out;
    for (const auto& x : f.coeffs) out.coeffs.push_back(x * c);
    return out;
}

XSeries to_xseries(const LambdaElement& a, unsigned deg_cap) {
    if (a.algebra() != Algebra::rank_one) throw DomainError("to_xseries needs a rank-one element");
    if (deg_cap > a.weight_cap()) throw DomainError("degree cap beyond the element's weight cap");
    XSeries out;
    for (unsigned n = 0; n <= deg_cap; ++n)
        out.coeffs.push_back(a.coefficient(Partition(std::vector<unsigned>(n, 1u))));
    return out;
}

XSeries j_symmetrized(unsigned n_max, unsigned q_order, Evaluation eval) {
    const JSeries j =
        j_by_correlators(LambdaElement::rank_one_x(n_max, q_order), n_max, q_order, n_max, eval);
    return to_xseries(j.value, n_max);
}

CheckReport finite_difference_check(const XSeries& f, unsigned deg_cap, unsigned q_order) {
    if (deg_cap > f.degree_cap() || q_order > f.q_order())
        return {false, "series is truncated below the requested check range"};
    for (unsigned n = 0; n <= deg_cap; ++n) {
        QSeries residual = f.coeffs[n].truncated(q_order);
        residual -= QSeries::monomial(1, n, q_order) * f.coeffs[n];
        if (n > 0) residual -= f.coeffs[n - 1];
        for (unsigned i = 0; i <= q_order; ++i) {
            if (sgn(residual[i]) != 0)
                return {false, "residual at x^" + std::to_string(n) + ", q^" + std::to_string(i) +
                                   " is " + to_string(residual[i])};
        }
    }
    return {};
}

namespace {

void exponent_vectors(unsigned vars, unsigned max_degree, Exponents& e, unsigned slot,
                      unsigned used, std::vector<Exponents>& out) {
    if (slot == vars) {
        out.push_back(e);
        return;
    }
    for (unsigned a = 0; used + a <= max_degree; ++a) {
        e[slot] = a;
        exponent_vectors(vars, max_degree, e, slot + 1, used + a, out);
    }
    e[slot] = 0;
}

std::string exponent_name(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

CheckReport j_gl_specialization(const Rational& t, unsigned num_vars, unsigned q_order,
                                unsigned deg_cap) {
    if (num_vars == 0 || num_vars > kGlSpecializationMaxVars)
        throw SizeLimitError("GL specialization supports 1 <= N <= " +
                             std::to_string(kGlSpecializationMaxVars));
    LambdaElement nu = LambdaElement::generator(1, deg_cap, q_order);
    nu *= t;
    const SeriesPolyN lhs = specialize_series(j_closed(nu, q_order, deg_cap).value, num_vars);

    // g(x) = e_q(x/(1-q))^t as exp(t log(.)); its constant term is 1.
    const XSeries g = xseries_exp(
        scale(xseries_log(substitute_over_one_minus_q(q_exponential(q_order, deg_cap))), t));
    const QSeries prefactor = one_minus_q_power(1, q_order);

    std::vector<Exponents> monomials;
    Exponents e(num_vars, 0);
    exponent_vectors(num_vars, deg_cap, e, 0, 0, monomials);
    for (const auto& mono : monomials) {
        QSeries rhs = prefactor;
        for (unsigned i = 0; i < num_vars; ++i) rhs *= g.coeffs[mono[i]];
        const QSeries left = lhs.coefficient(mono, QSeries(q_order));
        for (unsigned i = 0; i <= q_order; ++i) {
            if (left[i] != rhs[i])
                return {false, "coefficient of " + exponent_name(mono) + " at q^" +
                                   std::to_string(i) + ": " + to_string(left[i]) + " vs " +
                                   to_string(rhs[i])};
        }
    }
    return {};
}

CheckReport theorem_check(const LambdaElement& nu, unsigned n_max, unsigned q_order,
                          unsigned weight_cap, Evaluation eval) {
    const JSeries by_corr = j_by_correlators(nu, n_max, q_order, weight_cap, eval);
    const JSeries closed = j_closed(nu, q_order, weight_cap);
    return compare(by_corr.value, closed.value, by_corr.complete_weight, q_order);
}

}  // namespace pekt
