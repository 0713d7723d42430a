#include "pekt/characters.hpp"

#include "pekt/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace pekt {

namespace {

std::vector<unsigned> beta_numbers(const Partition& shape) {
    const std::size_t len = shape.length();
    std::vector<unsigned> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = shape[i] + static_cast<unsigned>(len - 1 - i);
    return beta;  // strictly decreasing
}

Partition from_beta(std::vector<unsigned> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const std::size_t len = beta.size();
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i < len; ++i) {
        unsigned part = beta[i] - static_cast<unsigned>(len - 1 - i);
        if (part) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

class MurnaghanNakayama {
public:
    BigInt operator()(const Partition& shape, const Partition& mu) {
        if (shape.size() != mu.size()) throw DomainError("shape and class sizes differ");
        if (mu.empty()) return 1;
        auto key = std::make_pair(shape, mu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const unsigned k = mu[0];
        Partition rest(std::vector<unsigned>(mu.parts().begin() + 1, mu.parts().end()));
        std::vector<unsigned> beta = beta_numbers(shape);
        BigInt total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] < k) continue;
            const unsigned target = beta[i] - k;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            // Leg length = beads strictly between target and beta[i].
            unsigned between = 0;
            for (unsigned b : beta)
                if (b > target && b < beta[i]) ++between;
            std::vector<unsigned> moved = beta;
            moved[i] = target;
            BigInt sub = (*this)(from_beta(std::move(moved)), rest);
            if (between % 2) total -= sub;
            else total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    struct KeyOrder {
        bool operator()(const std::pair<Partition, Partition>& a,
                        const std::pair<Partition, Partition>& b) const {
            GradedOrder less;
            if (less(a.first, b.first)) return true;
            if (less(b.first, a.first)) return false;
            return less(a.second, b.second);
        }
    };
    std::map<std::pair<Partition, Partition>, BigInt, KeyOrder> memo_;
};

std::vector<CycleType> class_list(unsigned n) {
    std::vector<CycleType> out;
    for (const auto& p : partitions(n)) out.emplace_back(p);
    return out;
}

}  // namespace

const BigInt& CharacterTable::value(const Partition& irrep, const CycleType& cls) const {
    return values_.at(irrep_index(irrep)).at(class_index(cls));
}

std::size_t CharacterTable::class_index(const CycleType& mu) const {
    auto it = std::find(classes_.begin(), classes_.end(), mu);
    if (it == classes_.end()) throw DomainError("class not in the table");
    return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t CharacterTable::irrep_index(const Partition& shape) const {
    auto it = std::find(irreps_.begin(), irreps_.end(), shape);
    if (it == irreps_.end()) throw DomainError("irreducible not in the table");
    return static_cast<std::size_t>(it - irreps_.begin());
}

CharacterTable character_table(unsigned n, unsigned cap) {
    if (n > cap)
        throw SizeLimitError("character table: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    CharacterTable t;
    t.n_ = n;
    t.irreps_ = partitions(n);
    t.classes_ = class_list(n);
    MurnaghanNakayama mn;
    t.values_.reserve(t.irreps_.size());
    for (const auto& shape : t.irreps_) {
        std::vector<BigInt> row;
        row.reserve(t.classes_.size());
        for (const auto& mu : t.classes_) row.push_back(mn(shape, mu.to_partition()));
        t.values_.push_back(std::move(row));
    }
    return t;
}

BigInt character_value(const Partition& shape, const CycleType& mu) {
    MurnaghanNakayama mn;
    return mn(shape, mu.to_partition());
}

ClassFunction::ClassFunction(unsigned n, std::vector<QSeries> values)
    : n_(n), classes_(class_list(n)), values_(std::move(values)) {
    if (values_.size() != classes_.size())
        throw DomainError("class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::from(unsigned n, const std::function<QSeries(const CycleType&)>& f) {
    std::vector<QSeries> values;
    for (const auto& p : partitions(n)) values.push_back(f(CycleType(p)));
    return ClassFunction(n, std::move(values));
}

ClassFunction ClassFunction::from_integers(unsigned n,
                                           const std::function<BigInt(const CycleType&)>& f) {
    return from(n, [&](const CycleType& mu) { return QSeries::constant(Rational(f(mu)), 0); });
}

ClassFunction ClassFunction::irreducible(const CharacterTable& table, const Partition& shape) {
    const auto& row = table.values().at(table.irrep_index(shape));
    std::vector<QSeries> values;
    for (const auto& v : row) values.push_back(QSeries::constant(Rational(v), 0));
    return ClassFunction(table.n(), std::move(values));
}

ClassFunction ClassFunction::trivial(unsigned n) {
    return from_integers(n, [](const CycleType&) { return BigInt(1); });
}

const QSeries& ClassFunction::at(const CycleType& mu) const {
    auto it = std::find(classes_.begin(), classes_.end(), mu);
    if (it == classes_.end()) throw DomainError("class not in the domain of the class function");
    return values_[static_cast<std::size_t>(it - classes_.begin())];
}

unsigned ClassFunction::order() const {
    unsigned m = values_.front().order();
    for (const auto& v : values_) m = std::min(m, v.order());
    return m;
}

QSeries pairing(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) throw DomainError("pairing of class functions on different groups");
    const unsigned m = std::min(f.order(), g.order());
    QSeries total(m);
    for (std::size_t c = 0; c < f.classes().size(); ++c) {
        const Rational weight = make_rational(1, centralizer_size(f.classes()[c]));
        total += (f.at(c) * g.at(c)) * weight;
    }
    return total;
}

QSeries multiplicity(const ClassFunction& f, const Partition& shape, const CharacterTable& table) {
    if (table.n() != f.n() || shape.size() != f.n())
        throw DomainError("multiplicity: class function, shape and table disagree on n");
    const auto& row = table.values().at(table.irrep_index(shape));
    QSeries total(f.order());
    for (std::size_t c = 0; c < f.classes().size(); ++c) {
        const Rational weight = make_rational(row[c], centralizer_size(f.classes()[c]));
        total += f.at(c) * weight;
    }
    return total;
}

QSeries multiplicity(const ClassFunction& f, const Partition& shape) {
    return multiplicity(f, shape, character_table(f.n()));
}

ClassFunction induce_character(const ClassFunction& f1, const ClassFunction& f2) {
    const unsigned n = f1.n() + f2.n();
    const unsigned m = std::min(f1.order(), f2.order());
    const auto classes = class_list(n);
    std::vector<QSeries> values(classes.size(), QSeries(m));
    // Ind(g) = sum over H-classes c inside the G-class of g of |C_G(g)| / |C_H(c)| * f(c).
    for (std::size_t a = 0; a < f1.classes().size(); ++a) {
        for (std::size_t b = 0; b < f2.classes().size(); ++b) {
            const CycleType joined = f1.classes()[a].join(f2.classes()[b]);
            const auto idx = static_cast<std::size_t>(
                std::find(classes.begin(), classes.end(), joined) - classes.begin());
            const Rational weight = make_rational(
                centralizer_size(joined),
                centralizer_size(f1.classes()[a]) * centralizer_size(f2.classes()[b]));
            values[idx] += (f1.at(a) * f2.at(b)) * weight;
        }
    }
    return ClassFunction(n, std::move(values));
}

}  // namespace pekt
