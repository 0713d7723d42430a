#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pekt/combinatorics.hpp"
#include "pekt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace pekt;

namespace {

// Independent enumeration: weakly decreasing sequences built front to back.
void brute_partitions(unsigned left, unsigned max_part, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        brute_partitions(left - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> brute_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    brute_partitions(n, n, cur, out);
    return out;
}

}  // namespace

TEST_CASE("partitions: small cases") {
    auto p0 = partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(p0[0].size() == 0);

    auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition{3});
    CHECK(p3[1] == Partition{2, 1});
    CHECK(p3[2] == Partition{1, 1, 1});

    CHECK(partitions(4).size() == 5);
}

TEST_CASE("partitions: match exhaustive enumeration in reverse-lex order") {
    for (unsigned n = 1; n <= 12; ++n) {
        auto got = partitions(n);
        auto expected = brute_partitions(n);  // already reverse-lex by construction
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expected[i]);
        for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(reverse_lex_before(got[i], got[i + 1]));
    }
    CHECK(partitions(20).size() == 627);
}

TEST_CASE("partitions: cap") {
    CHECK_THROWS_AS(partitions(kPartitionCap + 1), SizeLimitError);
    CHECK_THROWS_AS(partitions(13, 12), SizeLimitError);
}

TEST_CASE("Partition rejects zero parts and sorts") {
    CHECK_THROWS_AS(Partition({2, 0, 1}), DomainError);
    Partition p{1, 3, 2};
    CHECK(p.parts() == std::vector<unsigned>{3, 2, 1});
    CHECK(p.size() == 6);
    CHECK(p.to_string() == "(3,2,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 1}).join(Partition{2}) == Partition({2, 2, 1}));
    CHECK(Partition({2, 1}).scaled(3) == Partition({6, 3}));
}

TEST_CASE("class sizes agree with enumeration of S_3") {
    std::map<std::vector<unsigned>, int> counts;
    Permutation perm{0, 1, 2};
    do {
        ++counts[cycle_type_of(perm).to_partition().parts()];
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(class_size(CycleType(Partition{1, 1, 1})) == 1);
    CHECK(class_size(CycleType(Partition{2, 1})) == 3);
    CHECK(class_size(CycleType(Partition{3})) == 2);
    for (auto& [parts, count] : counts) CHECK(class_size(CycleType(Partition(parts))) == count);
}

TEST_CASE("class sizes sum to n!") {
    for (unsigned n = 0; n <= 10; ++n) {
        BigInt total = 0;
        for (const auto& p : partitions(n)) total += class_size(CycleType(p));
        CHECK(total == factorial(n));
    }
    // Beyond 64-bit range.
    CHECK(class_size(CycleType(Partition(std::vector<unsigned>(25, 1u)))) == 1);
    CHECK(class_size(CycleType(Partition{25})) == factorial(24));
}

TEST_CASE("Partition <-> CycleType round trip") {
    for (unsigned n = 0; n <= 10; ++n) {
        std::set<std::map<unsigned, unsigned>> seen;
        for (const auto& p : partitions(n)) {
            CycleType c(p);
            CHECK(c.size() == n);
            CHECK(c.to_partition() == p);
            seen.insert(c.multiplicities());
        }
        CHECK(seen.size() == partitions(n).size());
    }
    CycleType c(std::map<unsigned, unsigned>{{1, 2}, {3, 0}, {2, 1}});
    CHECK(c.multiplicities().size() == 2);
    CHECK(c.count(3) == 0);
    CHECK(c.size() == 4);
}

TEST_CASE("permutations_of_type") {
    auto id = permutations_of_type(CycleType(Partition{1, 1}));
    REQUIRE(id.size() == 1);
    CHECK(id[0] == Permutation{0, 1});

    auto swap = permutations_of_type(CycleType(Partition{2}));
    REQUIRE(swap.size() == 1);
    CHECK(swap[0] == Permutation{1, 0});

    CHECK(permutations_of_type(CycleType(Partition{2, 1})).size() == 3);

    for (unsigned n = 1; n <= 7; ++n) {
        std::size_t total = 0;
        for (const auto& p : partitions(n)) {
            CycleType mu(p);
            auto perms = permutations_of_type(mu);
            std::set<Permutation> distinct(perms.begin(), perms.end());
            CHECK(distinct.size() == perms.size());
            CHECK(BigInt(perms.size()) == class_size(mu));
            for (const auto& perm : perms) CHECK(cycle_type_of(perm) == mu);
            total += perms.size();
        }
        CHECK(BigInt(total) == factorial(n));
    }
    CHECK(permutations_of_type(CycleType(Partition{4, 2, 2})).size() == 1260);
    CHECK_THROWS_AS(permutations_of_type(CycleType(Partition{9})), SizeLimitError);
    CHECK(permutations_of_type(CycleType(Partition{9}), 9).size() == 40320);
}

TEST_CASE("cycle_type_of rejects non-permutations") {
    CHECK_THROWS_AS(cycle_type_of(std::vector<unsigned>{0, 3, 1}), DomainError);
    CHECK_THROWS_AS(cycle_type_of(std::vector<unsigned>{1, 1}), DomainError);
    CHECK_THROWS_AS(cycle_type_of(std::vector<unsigned>{0, 2, 2}), DomainError);
}
