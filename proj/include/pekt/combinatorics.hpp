#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pekt/rational.hpp"

namespace pekt {

/// Integer partition with parts stored in non-increasing order.
///
/// Doubles as the index of an S_n conjugacy class, of an irreducible
/// S_n-module, and of a power-sum monomial N_{p_1} N_{p_2} ... in the
/// lambda-ring module.
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; zero parts are rejected.
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned size() const noexcept { return total_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }

    /// Multiset union of parts.
    Partition join(const Partition& other) const;
    /// Every part multiplied by `factor`.
    Partition scaled(unsigned factor) const;
    Partition conjugate() const;

    /// "(2,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

/// True when `a` precedes `b` in reverse-lexicographic order,
/// e.g. (3) < (2,1) < (1,1,1). This is the canonical class order.
bool reverse_lex_before(const Partition& a, const Partition& b);

/// Total order on partitions of mixed size: by size, then reverse-lex.
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// Cycle-type (exponent) form: cycle length k -> multiplicity l_k > 0.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(const Partition& p);
    /// Zero multiplicities are dropped.
    explicit CycleType(const std::map<unsigned, unsigned>& multiplicities);

    const std::map<unsigned, unsigned>& multiplicities() const noexcept { return l_; }
    /// l_k, zero when k does not occur.
    unsigned count(unsigned k) const;
    unsigned size() const noexcept { return n_; }

    Partition to_partition() const;
    CycleType join(const CycleType& other) const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::map<unsigned, unsigned> l_;
    unsigned n_ = 0;
};

/// Images of 0..n-1.
using Permutation = std::vector<unsigned>;

inline constexpr unsigned kPartitionCap = 40;
inline constexpr unsigned kPermutationCap = 8;

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions(unsigned n, unsigned cap = kPartitionCap);

/// Centralizer order prod_k l_k! k^{l_k}.
BigInt centralizer_size(const CycleType& mu);
/// n! / prod_k l_k! k^{l_k}.
BigInt class_size(const CycleType& mu);

CycleType cycle_type_of(std::span<const unsigned> perm);

/// Visits every permutation of {0..n-1} with cycle type `mu`, each once.
void for_each_permutation_of_type(const CycleType& mu,
                                  const std::function<void(const Permutation&)>& visit,
                                  unsigned cap = kPermutationCap);

std::vector<Permutation> permutations_of_type(const CycleType& mu,
                                              unsigned cap = kPermutationCap);

/// Number of standard Young tableaux via the hook length formula.
BigInt hook_length_dimension(const Partition& shape);

}  // namespace pekt
