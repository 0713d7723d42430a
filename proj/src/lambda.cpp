#include "pekt/lambda.hpp"

#include "pekt/errors.hpp"

#include <algorithm>

namespace pekt {

const char* to_string(Algebra a) {
    return a == Algebra::power_sum ? "power_sum" : "rank_one";
}

LambdaElement::LambdaElement(unsigned weight_cap, unsigned q_order, Algebra algebra)
    : weight_cap_(weight_cap), q_order_(q_order), algebra_(algebra) {}

LambdaElement LambdaElement::generator(unsigned k, unsigned weight_cap, unsigned q_order) {
    if (k == 0) throw DomainError("power sums are indexed from N1");
    LambdaElement e(weight_cap, q_order);
    e.add_term(Partition{k}, QSeries::constant(1, q_order));
    return e;
}

LambdaElement LambdaElement::rank_one_x(unsigned weight_cap, unsigned q_order) {
    LambdaElement e(weight_cap, q_order, Algebra::rank_one);
    e.add_term(Partition{1}, QSeries::constant(1, q_order));
    return e;
}

LambdaElement LambdaElement::constant(const QSeries& c, unsigned weight_cap, Algebra algebra) {
    LambdaElement e(weight_cap, c.order(), algebra);
    e.add_term(Partition{}, c);
    return e;
}

void LambdaElement::add_term(const Partition& monomial, const QSeries& c) {
    if (algebra_ == Algebra::rank_one &&
        std::any_of(monomial.parts().begin(), monomial.parts().end(),
                    [](unsigned p) { return p != 1; }))
        throw DomainError("rank-one monomials are powers of x");
    if (monomial.size() > weight_cap_) return;
    if (c.order() < q_order_)
        throw DomainError("coefficient truncated below the element's q-order");
    QSeries coeff = c.order() == q_order_ ? c : c.truncated(q_order_);
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

QSeries LambdaElement::coefficient(const Partition& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? QSeries(q_order_) : it->second;
}

std::optional<unsigned> LambdaElement::max_weight() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.size();
}

std::optional<unsigned> LambdaElement::min_weight() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
}

LambdaElement LambdaElement::weight_part(unsigned w) const {
    LambdaElement out(weight_cap_, q_order_, algebra_);
    for (const auto& [mono, c] : terms_)
        if (mono.size() == w) out.terms_.emplace(mono, c);
    return out;
}

LambdaElement LambdaElement::truncated_weight(unsigned w) const {
    LambdaElement out(std::min(w, weight_cap_), q_order_, algebra_);
    for (const auto& [mono, c] : terms_)
        if (mono.size() <= w) out.terms_.emplace(mono, c);
    return out;
}

LambdaElement LambdaElement::truncated_q(unsigned q_order) const {
    LambdaElement out(weight_cap_, q_order, algebra_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, c);
    return out;
}

LambdaElement LambdaElement::with_weight_cap(unsigned weight_cap) const {
    LambdaElement out = truncated_weight(weight_cap);
    out.weight_cap_ = weight_cap;
    return out;
}

void LambdaElement::check_compatible(const LambdaElement& b) const {
    if (algebra_ != b.algebra_)
        throw DomainError("cannot combine elements of the power-sum and rank-one algebras");
}

void LambdaElement::prune(Terms& terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& b) {
    check_compatible(b);
    *this = truncated_weight(std::min(weight_cap_, b.weight_cap_));
    if (b.q_order_ < q_order_) *this = truncated_q(b.q_order_);
    for (const auto& [mono, c] : b.terms_) add_term(mono, c);
    return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& b) {
    check_compatible(b);
    *this = truncated_weight(std::min(weight_cap_, b.weight_cap_));
    if (b.q_order_ < q_order_) *this = truncated_q(b.q_order_);
    for (const auto& [mono, c] : b.terms_) add_term(mono, -c);
    return *this;
}

LambdaElement& LambdaElement::operator*=(const QSeries& c) {
    if (c.order() < q_order_) *this = truncated_q(c.order());
    for (auto& [mono, coeff] : terms_) coeff *= c;
    prune(terms_);
    return *this;
}

LambdaElement& LambdaElement::operator*=(const Rational& c) {
    for (auto& [mono, coeff] : terms_) coeff *= c;
    prune(terms_);
    return *this;
}

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
    a.check_compatible(b);
    const unsigned cap = std::min(a.weight_cap_, b.weight_cap_);
    LambdaElement out(cap, std::min(a.q_order_, b.q_order_), a.algebra_);
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.size() > cap) break;
        for (const auto& [mb, cb] : b.terms_) {
            // Terms are ordered by weight, so the rest of b is too heavy.
            if (ma.size() + mb.size() > cap) break;
            out.add_term(ma.join(mb), ca * cb);
        }
    }
    return out;
}

std::string LambdaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (mono.empty()) continue;
        if (algebra_ == Algebra::rank_one) {
            s += "*x";
            if (mono.size() > 1) s += "^" + std::to_string(mono.size());
            continue;
        }
        CycleType exps(mono);
        for (auto it = exps.multiplicities().rbegin(); it != exps.multiplicities().rend(); ++it) {
            s += "*N" + std::to_string(it->first);
            if (it->second > 1) s += "^" + std::to_string(it->second);
        }
    }
    return s;
}

LambdaElement adams(unsigned r, const LambdaElement& a, std::optional<unsigned> result_cap) {
    if (r == 0) throw DomainError("Adams operations are indexed from 1");
    const unsigned cap = result_cap.value_or(a.weight_cap());
    if (auto w = a.max_weight(); w && r * *w > cap)
        throw TruncationOverflowError("Psi^" + std::to_string(r) + " of a weight-" +
                                      std::to_string(*w) + " term exceeds weight cap " +
                                      std::to_string(cap));
    LambdaElement out(cap, a.q_order(), a.algebra());
    for (const auto& [mono, c] : a.terms()) {
        if (a.algebra() == Algebra::rank_one)
            out.add_term(Partition(std::vector<unsigned>(mono.size() * r, 1u)), c);
        else
            out.add_term(mono.scaled(r), c);
    }
    return out;
}

LambdaElement pow(const LambdaElement& a, unsigned e) {
    LambdaElement result =
        LambdaElement::constant(QSeries::constant(1, a.q_order()), a.weight_cap(), a.algebra());
    for (unsigned i = 0; i < e; ++i) result = result * a;
    return result;
}

LambdaElement exp(const LambdaElement& a) {
    LambdaElement result =
        LambdaElement::constant(QSeries::constant(1, a.q_order()), a.weight_cap(), a.algebra());
    auto w = a.min_weight();
    if (!w) return result;
    if (*w == 0) throw DomainError("exp: the argument must have zero weight-0 part");
    LambdaElement power = result;
    for (unsigned j = 1; j * *w <= a.weight_cap(); ++j) {
        power = power * a;
        power *= Rational(1, j);
        result += power;
    }
    return result;
}

}  // namespace pekt
