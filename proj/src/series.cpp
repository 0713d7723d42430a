#include "pekt/series.hpp"

#include "pekt/errors.hpp"

#include <algorithm>

namespace pekt {

QSeries::QSeries(std::vector<Rational> coeffs, unsigned order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::constant(const Rational& c, unsigned order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::monomial(const Rational& c, unsigned power, unsigned order) {
    QSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(unsigned order) const {
    if (order > this->order())
        throw DomainError("cannot raise truncation order from " + std::to_string(this->order()) +
                          " to " + std::to_string(order));
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

QSeries& QSeries::operator+=(const QSeries& b) {
    if (b.order() < order()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& b) {
    if (b.order() < order()) coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const unsigned m = std::min(a.order(), b.order());
    QSeries out(m);
    Rational term;
    for (unsigned i = 0; i <= m; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (unsigned j = 0; i + j <= m; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            term = a.coeffs_[i] * b.coeffs_[j];
            out.coeffs_[i + j] += term;
        }
    }
    return out;
}

QSeries& QSeries::operator*=(const QSeries& b) { return *this = *this * b; }

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

std::vector<std::string> QSeries::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(pekt::to_string(c));
    return out;
}

std::string QSeries::to_string() const {
    std::string s;
    for (unsigned i = 0; i <= order(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (s.empty()) {
            if (sgn(c) < 0) s += "-";
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (!unit || i == 0) s += pekt::to_string(mag);
        if (i > 0) {
            if (!unit) s += "*";
            s += i == 1 ? std::string("q") : "q^" + std::to_string(i);
        }
    }
    if (s.empty()) s = "0";
    return s + " + O(q^" + std::to_string(order() + 1) + ")";
}

bool agree_to(const QSeries& a, const QSeries& b, unsigned order) {
    if (a.order() < order || b.order() < order) return false;
    for (unsigned i = 0; i <= order; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

QSeries invert(const QSeries& a) {
    if (sgn(a[0]) == 0) throw NonInvertibleError("series with zero constant term is not invertible");
    const unsigned m = a.order();
    QSeries inv(m);
    const Rational c0inv = 1 / a[0];
    inv[0] = c0inv;
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 1; j <= k; ++j)
            if (sgn(a[j]) != 0) acc += a[j] * inv[k - j];
        inv[k] = -acc * c0inv;
    }
    return inv;
}

QSeries geometric(unsigned k, unsigned order) {
    if (k == 0) throw DomainError("geometric: k must be positive");
    QSeries s(order);
    for (unsigned i = 0; i <= order; i += k) s[i] = 1;
    return s;
}

QSeries one_minus_q_power(unsigned k, unsigned order) {
    QSeries s = QSeries::constant(1, order);
    if (k <= order) s[k] -= 1;
    return s;
}

QSeries q_integer(unsigned n, unsigned order) {
    QSeries s(order);
    for (unsigned i = 0; i < n && i <= order; ++i) s[i] = 1;
    return s;
}

QSeries q_factorial(unsigned n, unsigned order) {
    QSeries s = QSeries::constant(1, order);
    for (unsigned j = 2; j <= n; ++j) s *= q_integer(j, order);
    return s;
}

// Both use the derivative recurrences, which only need one pass:
//   exp: k e_k = sum_{j=1}^k j a_j e_{k-j}
//   log: k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
QSeries exp_series(const QSeries& a) {
    if (sgn(a[0]) != 0) throw DomainError("exp_series: constant term must be zero");
    const unsigned m = a.order();
    QSeries e(m);
    e[0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 1; j <= k; ++j)
            if (sgn(a[j]) != 0) acc += j * a[j] * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

QSeries log_series(const QSeries& a) {
    if (a[0] != 1) throw DomainError("log_series: constant term must be 1");
    const unsigned m = a.order();
    QSeries l(m);
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = k * a[k];
        for (unsigned j = 1; j < k; ++j)
            if (sgn(a[k - j]) != 0) acc -= j * l[j] * a[k - j];
        l[k] = acc / k;
    }
    return l;
}

QSeries pow(const QSeries& a, unsigned e) {
    QSeries result = QSeries::constant(1, a.order());
    QSeries base = a;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

}  // namespace pekt
