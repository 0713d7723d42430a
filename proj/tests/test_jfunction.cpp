#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pekt/errors.hpp"
#include "pekt/jfunction.hpp"

using namespace pekt;

namespace {

LambdaElement N(unsigned k, unsigned cap, unsigned m) { return LambdaElement::generator(k, cap, m); }

QSeries inverse_product(unsigned from, unsigned to, unsigned m) {
    QSeries out = QSeries::constant(1, m);
    for (unsigned j = from; j <= to; ++j) out *= geometric(j, m);
    return out;
}

}  // namespace

TEST_CASE("j_by_correlators: trivial input") {
    const JSeries j = j_by_correlators(LambdaElement(6, 8), 5, 8, 6);
    CHECK(j.value == LambdaElement::constant(one_minus_q_power(1, 8), 6));
    CHECK(j.complete_weight == 6);
    CHECK(j.provenance == Provenance::by_correlators);
}

TEST_CASE("j_by_correlators: rank-one expansion to x^3") {
    const unsigned m = 10;
    const JSeries j = j_by_correlators(LambdaElement::rank_one_x(3, m), 3, m, 3);
    const XSeries x = to_xseries(j.value, 3);
    CHECK(x.coeffs[0] == one_minus_q_power(1, m));
    CHECK(x.coeffs[1] == QSeries::constant(1, m));
    CHECK(x.coeffs[2] == geometric(2, m));
    CHECK(x.coeffs[3] == inverse_product(2, 3, m));
}

TEST_CASE("j_by_correlators: weight-2 part at nu = N1") {
    const unsigned m = 8;
    const JSeries j = j_by_correlators(N(1, 4, m), 4, m, 4);
    // (1-q) [ (1/2) N1^2 / (1-q)^2 + (1/2) N2 / (1-q^2) ]
    LambdaElement expected(4, m);
    expected.add_term(Partition{1, 1}, geometric(1, m) * Rational(1, 2));
    expected.add_term(Partition{2}, one_minus_q_power(1, m) * geometric(2, m) * Rational(1, 2));
    CHECK(j.value.weight_part(2) == expected);
    CHECK(j.value.weight_part(1) == N(1, 4, m));
    CHECK(j.complete_weight == 4);
}

TEST_CASE("j_by_correlators completeness bookkeeping") {
    const JSeries j = j_by_correlators(N(2, 12, 4) + N(3, 12, 4), 3, 4, 12);
    CHECK(j.complete_weight == 6);
    CHECK_THROWS_AS(j_by_correlators(N(1, 4, 4), 1, 4, 4), DomainError);
}

TEST_CASE("j_closed basics") {
    for (unsigned m : {0u, 3u, 12u})
        for (unsigned w : {1u, 4u, 9u})
            CHECK(j_closed(LambdaElement(w, m), m, w).value ==
                  LambdaElement::constant(one_minus_q_power(1, m), w));
    CHECK(j_closed(N(1, 4, 6), 6, 4).value.weight_part(1) == N(1, 4, 6));
    CHECK_THROWS_AS(j_closed(LambdaElement::constant(QSeries::constant(1, 4), 4), 4, 4), DomainError);
}

TEST_CASE("closed form matches the correlator sum") {
    const unsigned m = 8;
    for (const auto& nu : {N(1, 16, m), N(2, 16, m), N(1, 16, m) + N(2, 16, m),
                           N(1, 16, m) * Rational(-2, 3) + N(3, 16, m) * Rational(5)}) {
        const unsigned n_max = 4;
        const unsigned cap = n_max * nu.max_weight().value();
        const JSeries a = j_by_correlators(nu, n_max, m, cap);
        const JSeries b = j_closed(nu, m, cap);
        CHECK(compare(a.value, b.value, a.complete_weight).passed);
    }
    CHECK(theorem_check(N(1, 5, 6) + N(2, 5, 6), 5, 6, 10).passed);
}

TEST_CASE("q-exponential") {
    const unsigned m = 12;
    const XSeries e = q_exponential(m, 6);
    CHECK(e.coeffs[0] == QSeries::constant(1, m));
    const XSeries sub = substitute_over_one_minus_q(e);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(sub.coeffs[n] == inverse_product(1, n, m));
    }
    // x^2 coefficient of e_q(x/(1-q)) = 1/((1-q)^2 (1+q))
    QSeries denom = pow(one_minus_q_power(1, m), 2) * (QSeries::constant(1, m) + QSeries::monomial(1, 1, m));
    CHECK(sub.coeffs[2] == invert(denom));
}

TEST_CASE("finite-difference equation") {
    const unsigned m = 10;
    XSeries zero{std::vector<QSeries>(5, QSeries(m))};
    CHECK(finite_difference_check(zero, 4, m).passed);

    const XSeries f = scale(j_symmetrized(6, m), geometric(1, m));
    CHECK(finite_difference_check(f, 6, m).passed);

    XSeries one{std::vector<QSeries>(5, QSeries(m))};
    one.coeffs[0] = QSeries::constant(1, m);
    const CheckReport r = finite_difference_check(one, 4, m);
    CHECK_FALSE(r.passed);
    CHECK(r.detail == "residual at x^1, q^0 is -1");

    CHECK_FALSE(finite_difference_check(f, 7, m).passed);  // beyond the computed degree
}

TEST_CASE("xseries exp and log invert each other") {
    const unsigned m = 6;
    const XSeries e = substitute_over_one_minus_q(q_exponential(m, 5));
    CHECK(xseries_exp(xseries_log(e)).coeffs == e.coeffs);
    CHECK_THROWS_AS(xseries_log(scale(e, Rational(2))), DomainError);
}

TEST_CASE("GL specialization") {
    CHECK(j_gl_specialization(1, 1, 10, 6).passed);
    CHECK(j_gl_specialization(2, 1, 12, 6).passed);
    CHECK(j_gl_specialization(Rational(1, 2), 2, 8, 4).passed);
    CHECK(j_gl_specialization(Rational(-1, 3), 3, 4, 3).passed);
    CHECK_THROWS_AS(j_gl_specialization(1, 5, 4, 2), SizeLimitError);

    // t = 1, N = 1 is the rank-one symmetrized series.
    const unsigned m = 8;
    const XSeries sym = j_symmetrized(5, m);
    const SeriesPolyN gl = specialize_series(j_closed(N(1, 5, m), m, 5).value, 1);
    for (unsigned n = 0; n <= 5; ++n) CHECK(gl.coefficient({n}, QSeries(m)) == sym.coeffs[n]);
}

TEST_CASE("provenance names") {
    CHECK(std::string(to_string(Provenance::closed_form)) == "closed_form");
    CHECK(std::string(to_string(Provenance::gl_specialization)) == "gl_specialization");
}
