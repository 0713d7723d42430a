#pragma once

#include <map>
#include <optional>
#include <string>

#include "pekt/combinatorics.hpp"
#include "pekt/series.hpp"

namespace pekt {

/// Which lambda-algebra an element lives in.
///
/// power_sum: Q[[N_1, N_2, ...]] with Psi^r(N_m) = N_{rm}.
/// rank_one:  Q[x] with Psi^r(x) = x^r; the monomial x^e is keyed by (1^e).
enum class Algebra { power_sum, rank_one };

const char* to_string(Algebra a);

/// Element of Lambda (x) Q[[q]] in the power-sum monomial basis.
///
/// A monomial prod_k N_k^{e_k} is keyed by the partition with e_k parts
/// equal to k, so its weight sum_k k e_k is the partition size. The
/// element is known modulo monomials of weight > weight_cap() and modulo
/// q^{q_order()+1}. Zero coefficients are never stored.
class LambdaElement {
public:
    using Terms = std::map<Partition, QSeries, GradedOrder>;

    LambdaElement(unsigned weight_cap, unsigned q_order, Algebra algebra = Algebra::power_sum);

    /// N_k (power_sum only).
    static LambdaElement generator(unsigned k, unsigned weight_cap, unsigned q_order);
    /// x of the rank-one algebra.
    static LambdaElement rank_one_x(unsigned weight_cap, unsigned q_order);
    static LambdaElement constant(const QSeries& c, unsigned weight_cap,
                                  Algebra algebra = Algebra::power_sum);

    unsigned weight_cap() const noexcept { return weight_cap_; }
    unsigned q_order() const noexcept { return q_order_; }
    Algebra algebra() const noexcept { return algebra_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * monomial; silently drops monomials above the weight cap.
    void add_term(const Partition& monomial, const QSeries& c);
    /// Coefficient of a monomial, zero series when absent.
    QSeries coefficient(const Partition& monomial) const;

    /// Largest / smallest weight among stored monomials (nullopt when zero).
    std::optional<unsigned> max_weight() const;
    std::optional<unsigned> min_weight() const;

    /// Terms of weight exactly w.
    LambdaElement weight_part(unsigned w) const;
    /// Terms of weight <= w; the result's cap is min(w, cap).
    LambdaElement truncated_weight(unsigned w) const;
    /// Same terms at a lower (or equal) q-order.
    LambdaElement truncated_q(unsigned q_order) const;
    /// Same terms, recorded with a smaller or larger cap. Raising the cap
    /// is only sound when the caller knows the element is exact there.
    LambdaElement with_weight_cap(unsigned weight_cap) const;

    LambdaElement& operator+=(const LambdaElement& b);
    LambdaElement& operator-=(const LambdaElement& b);
    LambdaElement& operator*=(const QSeries& c);
    LambdaElement& operator*=(const Rational& c);

    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
    friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
    friend LambdaElement operator*(LambdaElement a, const QSeries& c) { return a *= c; }
    friend LambdaElement operator*(const QSeries& c, LambdaElement a) { return a *= c; }
    friend LambdaElement operator*(LambdaElement a, const Rational& c) { return a *= c; }
    friend LambdaElement operator*(const Rational& c, LambdaElement a) { return a *= c; }

    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

    /// e.g. "(1 + O(q^3))*N1^2 + (1/2 + O(q^3))*N2".
    std::string to_string() const;

private:
    void check_compatible(const LambdaElement& b) const;
    static void prune(Terms& terms);

    unsigned weight_cap_;
    unsigned q_order_;
    Algebra algebra_;
    Terms terms_;
};

/// Psi^r. Throws TruncationOverflowError if r * max_weight(a) exceeds
/// `result_cap`; the default cap is a.weight_cap().
LambdaElement adams(unsigned r, const LambdaElement& a, std::optional<unsigned> result_cap = {});

/// a^e by repeated multiplication.
LambdaElement pow(const LambdaElement& a, unsigned e);

/// Truncated Taylor series sum_j a^j / j!. Requires a zero weight-0 part;
/// the sum stops at j = weight_cap / min_weight(a).
LambdaElement exp(const LambdaElement& a);

}  // namespace pekt
