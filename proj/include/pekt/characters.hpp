#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pekt/combinatorics.hpp"
#include "pekt/series.hpp"

namespace pekt {

inline constexpr unsigned kCharacterTableCap = 12;

/// Irreducible characters of S_n. Rows are irreducibles, columns are
/// conjugacy classes, both in canonical (reverse-lex) partition order.
class CharacterTable {
public:
    unsigned n() const noexcept { return n_; }
    const std::vector<CycleType>& classes() const noexcept { return classes_; }
    const std::vector<Partition>& irreps() const noexcept { return irreps_; }
    const std::vector<std::vector<BigInt>>& values() const noexcept { return values_; }

    const BigInt& value(std::size_t irrep, std::size_t cls) const { return values_.at(irrep).at(cls); }
    const BigInt& value(const Partition& irrep, const CycleType& cls) const;

    std::size_t class_index(const CycleType& mu) const;
    std::size_t irrep_index(const Partition& shape) const;

private:
    friend CharacterTable character_table(unsigned n, unsigned cap);

    unsigned n_ = 0;
    std::vector<CycleType> classes_;
    std::vector<Partition> irreps_;
    std::vector<std::vector<BigInt>> values_;
};

/// Murnaghan-Nakayama, with border strips removed on the beta-number abacus.
CharacterTable character_table(unsigned n, unsigned cap = kCharacterTableCap);

/// Single character value chi_shape(mu) by the same recursion.
BigInt character_value(const Partition& shape, const CycleType& mu);

/// A q-series-valued class function on S_n, stored in canonical class order.
class ClassFunction {
public:
    ClassFunction() = default;
    /// `values` must have one entry per partition of n in canonical order.
    ClassFunction(unsigned n, std::vector<QSeries> values);

    static ClassFunction from(unsigned n, const std::function<QSeries(const CycleType&)>& f);
    /// Integer-valued class function (series of order 0).
    static ClassFunction from_integers(unsigned n, const std::function<BigInt(const CycleType&)>& f);
    /// Row of a character table as an order-0 class function.
    static ClassFunction irreducible(const CharacterTable& table, const Partition& shape);
    static ClassFunction trivial(unsigned n);

    unsigned n() const noexcept { return n_; }
    const std::vector<CycleType>& classes() const noexcept { return classes_; }
    const std::vector<QSeries>& values() const noexcept { return values_; }
    const QSeries& at(const CycleType& mu) const;
    const QSeries& at(std::size_t cls) const { return values_.at(cls); }
    /// Minimum truncation order over all values.
    unsigned order() const;

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    unsigned n_ = 0;
    std::vector<CycleType> classes_;
    std::vector<QSeries> values_;
};

/// (1/n!) sum_mu |C_mu| f(mu) g(mu). Characters of S_n are real, so no
/// conjugation is needed.
QSeries pairing(const ClassFunction& f, const ClassFunction& g);

/// Multiplicity of the irreducible `shape` in f.
QSeries multiplicity(const ClassFunction& f, const Partition& shape);
QSeries multiplicity(const ClassFunction& f, const Partition& shape, const CharacterTable& table);

/// Character of Ind_{S_k x S_l}^{S_{k+l}} (f1 (x) f2).
ClassFunction induce_character(const ClassFunction& f1, const ClassFunction& f2);

}  // namespace pekt
