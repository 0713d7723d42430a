#pragma once

#include <vector>

#include "pekt/point_model.hpp"
#include "pekt/sympoly.hpp"

namespace pekt {

enum class Provenance { by_correlators, closed_form, symmetrized, gl_specialization };

const char* to_string(Provenance p);

/// A J-function value in Lambda (x) Q[[q]].
struct JSeries {
    LambdaElement value;
    /// Every monomial of weight <= complete_weight is exact.
    unsigned complete_weight;
    Provenance provenance;

    unsigned q_order() const { return value.q_order(); }
    unsigned weight_cap() const { return value.weight_cap(); }
};

/// 1 - q + nu + sum_{n=2}^{n_max} correlator(nu, n).
JSeries j_by_correlators(const LambdaElement& nu, unsigned n_max, unsigned q_order,
                         unsigned weight_cap, Evaluation eval = {});

/// (1 - q) exp(sum_{k>=1} Psi^k(nu) / (k (1 - q^k))), truncated at weight_cap.
JSeries j_closed(const LambdaElement& nu, unsigned q_order, unsigned weight_cap);

/// Power series in one variable x with q-series coefficients; index = x-degree.
struct XSeries {
    std::vector<QSeries> coeffs;

    unsigned degree_cap() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    unsigned q_order() const;
};

/// sum_{n <= deg_cap} y^n / [n]_q!.
XSeries q_exponential(unsigned q_order, unsigned deg_cap);

/// Substitutes y = x / (1 - q): the x^n coefficient picks up (1 - q)^{-n}.
XSeries substitute_over_one_minus_q(const XSeries& f);

XSeries xseries_exp(const XSeries& a);
XSeries xseries_log(const XSeries& a);
XSeries scale(const XSeries& f, const QSeries& c);
XSeries scale(const XSeries& f, const Rational& c);

/// Reads a rank-one element as a series in x.
XSeries to_xseries(const LambdaElement& a, unsigned deg_cap);

/// J^sym = j_by_correlators(x, n_max) in the rank-one algebra, as a series in x.
XSeries j_symmetrized(unsigned n_max, unsigned q_order, Evaluation eval = {});

/// f(x) - f(qx) - x f(x) == 0 coefficient-wise up to x^deg_cap and q^q_order.
CheckReport finite_difference_check(const XSeries& f, unsigned deg_cap, unsigned q_order);

inline constexpr unsigned kGlSpecializationMaxVars = 4;

/// Compares j_closed(t N_1) specialized to N variables against
/// (1 - q) prod_i exp(t log e_q(x_i / (1 - q))) on all monomials of degree <= deg_cap.
CheckReport j_gl_specialization(const Rational& t, unsigned num_vars, unsigned q_order,
                                unsigned deg_cap);

/// j_by_correlators(nu, n_max) against j_closed(nu) on the weights where the
/// former is complete.
CheckReport theorem_check(const LambdaElement& nu, unsigned n_max, unsigned q_order,
                          unsigned weight_cap, Evaluation eval = {});

}  // namespace pekt
