#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pekt/rational.hpp"

namespace pekt {

/// Power series in q over Q, known modulo q^{order+1}.
///
/// Binary operations on series of different orders truncate to the smaller
/// order, and the result records it.
class QSeries {
public:
    /// The zero series of order 0.
    QSeries() : coeffs_(1) {}
    explicit QSeries(unsigned order) : coeffs_(order + 1) {}
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    QSeries(std::vector<Rational> coeffs, unsigned order);

    static QSeries constant(const Rational& c, unsigned order);
    static QSeries monomial(const Rational& c, unsigned power, unsigned order);

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of q^i; zero past the truncation order is not implied,
    /// so reading beyond order() is an error.
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    bool is_zero() const;
    QSeries truncated(unsigned order) const;

    QSeries& operator+=(const QSeries& b);
    QSeries& operator-=(const QSeries& b);
    QSeries& operator*=(const QSeries& b);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    QSeries operator-() const;

    /// Same order and identical coefficients.
    friend bool operator==(const QSeries&, const QSeries&) = default;

    /// Coefficients as "p/q" strings.
    std::vector<std::string> to_strings() const;
    /// Human-readable form such as "1 - q + 2*q^3 + O(q^5)".
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// Coefficient-wise agreement up to q^order (both series must reach it).
bool agree_to(const QSeries& a, const QSeries& b, unsigned order);

/// Multiplicative inverse; throws NonInvertibleError when c_0 == 0.
QSeries invert(const QSeries& a);

/// 1 / (1 - q^k).
QSeries geometric(unsigned k, unsigned order);

/// 1 - q^k.
QSeries one_minus_q_power(unsigned k, unsigned order);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QSeries q_integer(unsigned n, unsigned order);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QSeries q_factorial(unsigned n, unsigned order);

/// Truncated exp; requires zero constant term (DomainError otherwise).
QSeries exp_series(const QSeries& a);

/// Truncated log; requires constant term 1 (DomainError otherwise).
QSeries log_series(const QSeries& a);

/// a^e for a non-negative integer e.
QSeries pow(const QSeries& a, unsigned e);

}  // namespace pekt
