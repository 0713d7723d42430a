#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pekt/characters.hpp"
#include "pekt/lambda.hpp"

namespace pekt {

/// Which S_n-module the symmetric algebra is taken over.
///
/// full:    polynomial functions on C^n with S_n permuting coordinates.
/// coxeter: polynomial functions on the (n-1)-dimensional complement of
///          the diagonal; its graded trace is (1-q) times the full one.
enum class Space { full, coxeter };

/// Graded trace of a permutation of cycle type mu on S^*_q of the space:
/// prod_k (1-q^k)^{-l_k}, times (1-q) for the Coxeter summand.
QSeries graded_trace(const CycleType& mu, Space space, unsigned q_order);

/// mu -> graded_trace(mu, space) as a class function on S_n.
ClassFunction graded_trace_function(unsigned n, Space space, unsigned q_order);

inline constexpr unsigned kBruteForceMaxVars = 5;
inline constexpr unsigned kBruteForceMaxOrder = 10;

/// Counts, for each degree m <= q_order, the degree-m monomials in n
/// variables fixed by `perm`. This is the trace of the permutation in the
/// monomial basis. Capped at n <= 5, q_order <= 10.
QSeries brute_force_trace(std::span<const unsigned> perm, unsigned q_order,
                          Space space = Space::full);

/// Options for the class-sum loops.
struct Evaluation {
    /// Worker threads; 0 or 1 evaluates sequentially. Results are summed
    /// in canonical class order regardless.
    unsigned threads = 1;
};

/// The S_n-invariant genus-0 correlator <nu,...,nu, 1/(1-qL)>_{0,n+1} at the point:
///   sum_{mu |- n} (1/z_mu) graded_trace(mu, coxeter) prod_r Psi^r(nu)^{l_r(mu)}.
/// The result has weight cap `weight_cap` and q-order `q_order`.
LambdaElement correlator(const LambdaElement& nu, unsigned n, unsigned q_order,
                         unsigned weight_cap, Evaluation eval = {});

/// One group of identical inputs: nu repeated k times.
struct InputGroup {
    LambdaElement nu;
    unsigned multiplicity;
};

/// Correlator invariant under S_{k_1} x ... x S_{k_s}; a tuple of cycle
/// types (one per group) acts on C^n with the union cycle type.
LambdaElement correlator_mixed(const std::vector<InputGroup>& inputs, unsigned q_order,
                               unsigned weight_cap, Evaluation eval = {});

struct CheckReport {
    bool passed = true;
    /// First discrepancy, empty on success.
    std::string detail;
};

/// First differing coefficient between two elements, restricted to
/// weights <= max_weight and q-powers <= q_order.
CheckReport compare(const LambdaElement& lhs, const LambdaElement& rhs,
                    std::optional<unsigned> max_weight = {},
                    std::optional<unsigned> q_order = {});

inline constexpr unsigned kBinomialMaxN = 7;

/// correlator(nu' + nu'', n) == sum_{k+l=n} correlator_mixed([(nu',k),(nu'',l)]).
CheckReport binomial_check(const LambdaElement& nu1, const LambdaElement& nu2, unsigned n,
                           unsigned q_order, unsigned weight_cap, Evaluation eval = {});

/// Integer character of S_n on degree-m polynomials on the Coxeter space.
ClassFunction module_character(unsigned n, unsigned degree);

/// Multiplicity of every irreducible (canonical order) in module_character(n, m).
std::vector<std::pair<Partition, BigInt>> module_decomposition(unsigned n, unsigned degree);

/// sum_m dim(S_n-invariant degree-m polynomials on the Coxeter space) q^m,
/// by averaging brute-force traces over all n! permutations.
QSeries brute_force_invariant_series(unsigned n, unsigned q_order);

}  // namespace pekt
