#include "pekt/combinatorics.hpp"

#include "pekt/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pekt {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition Partition::join(const Partition& other) const {
    std::vector<unsigned> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<>());
    Partition p;
    p.parts_ = std::move(merged);
    p.total_ = total_ + other.total_;
    return p;
}

Partition Partition::scaled(unsigned factor) const {
    Partition p = *this;
    for (auto& part : p.parts_) part *= factor;
    p.total_ *= factor;
    return p;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> conj;
    if (!parts_.empty()) {
        conj.resize(parts_.front(), 0);
        for (unsigned part : parts_)
            for (unsigned j = 0; j < part; ++j) ++conj[j];
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool reverse_lex_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

bool GradedOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return reverse_lex_before(a, b);
}

CycleType::CycleType(const Partition& p) : n_(p.size()) {
    for (unsigned part : p.parts()) ++l_[part];
}

CycleType::CycleType(const std::map<unsigned, unsigned>& multiplicities) {
    for (auto [k, mult] : multiplicities) {
        if (k == 0) throw DomainError("cycle length must be positive");
        if (mult == 0) continue;
        l_[k] = mult;
        n_ += k * mult;
    }
}

unsigned CycleType::count(unsigned k) const {
    auto it = l_.find(k);
    return it == l_.end() ? 0 : it->second;
}

Partition CycleType::to_partition() const {
    std::vector<unsigned> parts;
    for (auto [k, mult] : l_) parts.insert(parts.end(), mult, k);
    return Partition(std::move(parts));
}

CycleType CycleType::join(const CycleType& other) const {
    CycleType out = *this;
    for (auto [k, mult] : other.l_) out.l_[k] += mult;
    out.n_ += other.n_;
    return out;
}

std::vector<Partition> partitions(unsigned n, unsigned cap) {
    if (n > cap)
        throw SizeLimitError("partitions: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard successor in reverse-lex order: find the rightmost part > 1,
    // decrement it and greedily refill the tail.
    std::vector<unsigned> a{n};
    while (true) {
        out.emplace_back(a);
        unsigned ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        unsigned k = --a.back();
        unsigned rest = ones + 1;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest) a.push_back(rest);
    }
    return out;
}

BigInt centralizer_size(const CycleType& mu) {
    BigInt z = 1;
    for (auto [k, mult] : mu.multiplicities()) {
        BigInt kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), k, mult);
        z *= factorial(mult) * kpow;
    }
    return z;
}

BigInt class_size(const CycleType& mu) {
    return factorial(mu.size()) / centralizer_size(mu);
}

CycleType cycle_type_of(std::span<const unsigned> perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (unsigned image : perm) {
        if (image >= n || seen[image]) throw DomainError("not a permutation");
        seen[image] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    std::map<unsigned, unsigned> l;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        unsigned len = 0;
        for (std::size_t i = start; !seen[i]; i = perm[i]) {
            seen[i] = true;
            ++len;
        }
        ++l[len];
    }
    return CycleType(l);
}

namespace {

struct CycleBuilder {
    std::map<unsigned, unsigned> remaining;
    Permutation perm;
    std::vector<bool> used;
    const std::function<void(const Permutation&)>& visit;

    // Each permutation is generated once: cycles are written starting at
    // their smallest element and emitted in increasing order of that element.
    void next_cycle() {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            visit(perm);
            return;
        }
        const unsigned start = static_cast<unsigned>(first - used.begin());
        for (auto& [len, mult] : remaining) {
            if (mult == 0) continue;
            --mult;
            used[start] = true;
            extend(start, start, len - 1);
            used[start] = false;
            ++mult;
        }
    }

    void extend(unsigned start, unsigned last, unsigned left) {
        if (left == 0) {
            perm[last] = start;
            next_cycle();
            return;
        }
        for (unsigned j = start + 1; j < used.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            perm[last] = j;
            extend(start, j, left - 1);
            used[j] = false;
        }
    }
};

}  // namespace

void for_each_permutation_of_type(const CycleType& mu,
                                  const std::function<void(const Permutation&)>& visit,
                                  unsigned cap) {
    const unsigned n = mu.size();
    if (n > cap)
        throw SizeLimitError("permutation listing: n = " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
    CycleBuilder b{mu.multiplicities(), Permutation(n), std::vector<bool>(n, false), visit};
    b.next_cycle();
}

std::vector<Permutation> permutations_of_type(const CycleType& mu, unsigned cap) {
    std::vector<Permutation> out;
    for_each_permutation_of_type(mu, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

BigInt hook_length_dimension(const Partition& shape) {
    const Partition conj = shape.conjugate();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < shape.length(); ++i)
        for (unsigned j = 0; j < shape[i]; ++j)
            hooks *= (shape[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(shape.size()) / hooks;
}

}  // namespace pekt
