#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pekt/errors.hpp"
#include "pekt/series.hpp"

#include <random>

using namespace pekt;

namespace {

QSeries from_ints(std::vector<long> c, unsigned order) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return QSeries(std::move(r), order);
}

QSeries random_series(std::mt19937_64& rng, unsigned order, bool unit_constant = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    QSeries s(order);
    for (unsigned i = 0; i <= order; ++i) s[i] = make_rational(num(rng), den(rng));
    if (unit_constant) s[0] = 1;
    return s;
}

// Reference product: explicit double loop over all index pairs, then truncate.
std::vector<Rational> naive_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> full(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) full[i + j] += a[i] * b[j];
    return full;
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
    CHECK(to_string(Rational(3, 1)) == "3");
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("4/8") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK(factorial(21) == BigInt("51090942171709440000"));
}

TEST_CASE("basic products") {
    CHECK(from_ints({1, 1}, 2) * from_ints({1, -1}, 2) == from_ints({1, 0, -1}, 2));
    CHECK(from_ints({1, 1, 1}, 2) * from_ints({1, -1}, 2) == from_ints({1}, 2));
}

TEST_CASE("products agree with naive convolution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned m = 1 + trial % 12;
        QSeries a = random_series(rng, m), b = random_series(rng, m);
        auto full = naive_product(a.coefficients(), b.coefficients());
        QSeries prod = a * b;
        REQUIRE(prod.order() == m);
        for (unsigned i = 0; i <= m; ++i) CHECK(prod[i] == full[i]);
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("mixed orders truncate to the smaller one") {
    QSeries a = geometric(1, 10);
    QSeries b = geometric(1, 4);
    QSeries s = a + b;
    CHECK(s.order() == 4);
    CHECK(s == from_ints({2, 2, 2, 2, 2}, 4));
    CHECK((a * b).order() == 4);
    CHECK_THROWS_AS(b.truncated(5), DomainError);
}

TEST_CASE("invert") {
    CHECK(invert(from_ints({1, -1}, 6)) == geometric(1, 6));
    for (unsigned k = 1; k <= 5; ++k) CHECK(invert(one_minus_q_power(k, 12)) == geometric(k, 12));
    CHECK_THROWS_AS(invert(from_ints({0, 1}, 3)), NonInvertibleError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 9);
        if (sgn(a[0]) == 0) a[0] = 2;
        CHECK(a * invert(a) == QSeries::constant(1, 9));
        CHECK(invert(invert(a)) == a);
    }
}

TEST_CASE("geometric") {
    CHECK(geometric(1, 3) == from_ints({1, 1, 1, 1}, 3));
    CHECK(geometric(2, 5) == from_ints({1, 0, 1, 0, 1, 0}, 5));
    CHECK(geometric(3, 2) == from_ints({1}, 2));
    CHECK_THROWS_AS(geometric(0, 2), DomainError);
}

TEST_CASE("q-integers and q-factorials") {
    CHECK(q_integer(1, 5) == QSeries::constant(1, 5));
    CHECK(q_integer(0, 5).is_zero());
    CHECK(q_factorial(0, 5) == QSeries::constant(1, 5));
    CHECK(q_factorial(3, 6) == from_ints({1, 1}, 6) * from_ints({1, 1, 1}, 6));
    CHECK(q_factorial(3, 6) == from_ints({1, 2, 2, 1}, 6));
    for (unsigned n = 0; n <= 8; ++n) {
        QSeries lhs = pow(one_minus_q_power(1, 30), n) * q_factorial(n, 30);
        QSeries rhs = QSeries::constant(1, 30);
        for (unsigned j = 1; j <= n; ++j) rhs *= one_minus_q_power(j, 30);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exp and log") {
    CHECK(exp_series(QSeries(6)) == QSeries::constant(1, 6));

    const unsigned m = 20;
    QSeries minus_log(m);  // -log(1-q) = sum q^k / k
    for (unsigned k = 1; k <= m; ++k) minus_log[k] = Rational(1, k);
    CHECK(exp_series(minus_log) == geometric(1, m));
    CHECK(log_series(one_minus_q_power(1, m)) == -minus_log);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, 10);
        a[0] = 0;
        CHECK(log_series(exp_series(a)) == a);
        QSeries b = random_series(rng, 10, true);
        CHECK(exp_series(log_series(b)) == b);
    }
    CHECK_THROWS_AS(exp_series(QSeries::constant(1, 3)), DomainError);
    CHECK_THROWS_AS(log_series(QSeries::constant(2, 3)), DomainError);
}

TEST_CASE("formatting") {
    CHECK(from_ints({1, -1, 0, 2}, 4).to_string() == "1 - q + 2*q^3 + O(q^5)");
    CHECK(from_ints({1, -1}, 2).to_strings() == std::vector<std::string>{"1", "-1", "0"});
    CHECK(QSeries(2).to_string() == "0 + O(q^3)");
}
