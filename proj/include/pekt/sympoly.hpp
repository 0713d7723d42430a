#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pekt/characters.hpp"
#include "pekt/errors.hpp"
#include "pekt/lambda.hpp"

namespace pekt {

using Exponents = std::vector<unsigned>;

inline bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero_coeff(const QSeries& c) { return c.is_zero(); }

/// Polynomial in x_1..x_N with coefficients in C (Rational or QSeries).
template <class C>
class Polynomial {
public:
    using Terms = std::map<Exponents, C>;

    explicit Polynomial(unsigned num_vars) : n_(num_vars) {}

    static Polynomial variable(unsigned num_vars, unsigned i, const C& one) {
        Polynomial p(num_vars);
        Exponents e(num_vars, 0);
        e.at(i) = 1;
        p.add_term(e, one);
        return p;
    }

    unsigned num_vars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const C& c) {
        if (e.size() != n_) throw DomainError("exponent vector has the wrong length");
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const Exponents& e, const C& zero) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    /// Invariant under every permutation of the variables. Checking
    /// adjacent transpositions suffices since they generate S_N.
    bool is_symmetric() const {
        for (unsigned i = 0; i + 1 < n_; ++i) {
            for (const auto& [e, c] : terms_) {
                Exponents swapped = e;
                std::swap(swapped[i], swapped[i + 1]);
                auto it = terms_.find(swapped);
                if (it == terms_.end() || !(it->second == c)) return false;
            }
        }
        return true;
    }

    Polynomial& operator+=(const Polynomial& b) {
        check_vars(b);
        for (const auto& [e, c] : b.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        check_vars(b);
        for (const auto& [e, c] : b.terms_) add_term(e, -c);
        return *this;
    }
    template <class S>
    Polynomial& scale(const S& s) {
        Polynomial out(n_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return *this = std::move(out);
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial out(a.n_);
        Exponents e(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (unsigned i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    static unsigned total_degree(const Exponents& e) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }

private:
    void check_vars(const Polynomial& b) const {
        if (b.n_ != n_) throw DomainError("polynomials in different numbers of variables");
    }

    unsigned n_;
    Terms terms_;
};

using SymPolyN = Polynomial<Rational>;
using SeriesPolyN = Polynomial<QSeries>;

/// Validates symmetry; throws DomainError on a non-symmetric input.
SymPolyN make_symmetric(unsigned num_vars, const SymPolyN::Terms& terms);

SymPolyN constant_poly(unsigned num_vars, const Rational& c);
/// x_1^k + ... + x_N^k.
SymPolyN power_sum(unsigned k, unsigned num_vars);
/// Sum of all monomials of degree k.
SymPolyN complete_homogeneous(unsigned k, unsigned num_vars);
SymPolyN pow(const SymPolyN& p, unsigned e);

/// Image of a power-sum monomial under N_k -> x_1^k + ... + x_N^k.
/// For the rank-one algebra x -> x_1 and N must be 1.
SymPolyN specialize_monomial(const Partition& monomial, Algebra algebra, unsigned num_vars);

/// Specialization of one q-coefficient slice of `a`.
SymPolyN specialize(const LambdaElement& a, unsigned num_vars, unsigned q_power);
/// Specialization of an element whose coefficients must all be q-free
/// (DomainError otherwise).
SymPolyN specialize(const LambdaElement& a, unsigned num_vars);
/// Specialization keeping the full q-series coefficients.
SeriesPolyN specialize_series(const LambdaElement& a, unsigned num_vars);

/// Schur polynomial by the Jacobi-Trudi determinant det(h_{shape_i - i + j}).
SymPolyN schur(const Partition& shape, unsigned num_vars);
/// Schur polynomial by the bialternant a_{shape+delta} / a_delta.
SymPolyN schur_bialternant(const Partition& shape, unsigned num_vars);

/// prod_r N_r^{l_r} specialized to N variables.
SymPolyN schur_weyl_lhs(const CycleType& mu, unsigned num_vars);
/// sum over shapes of chi_shape(mu) s_shape; shapes with more than N rows are skipped.
SymPolyN schur_weyl_rhs(const CycleType& mu, unsigned num_vars, const CharacterTable& table);

std::string to_string(const SymPolyN& p);

}  // namespace pekt
