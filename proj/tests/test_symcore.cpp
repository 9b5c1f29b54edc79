#include "doctest.h"
#include "mapforge/symcore.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace mapforge;

namespace {
Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::from_zero_based(v);
}

// All permutations of {1..n} as 1-based image lists.
std::vector<std::vector<int>> brute_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Independent partition generator: filter all compositions for weakly decreasing ones.
int brute_partition_count(int n) {
    std::set<std::vector<int>> seen;
    for (int mask = 0; mask < (1 << std::max(0, n - 1)); ++mask) {
        std::vector<int> parts;
        int cur = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask >> i & 1) {
                parts.push_back(cur);
                cur = 1;
            } else {
                ++cur;
            }
        }
        if (n > 0) parts.push_back(cur);
        std::sort(parts.rbegin(), parts.rend());
        seen.insert(parts);
    }
    return static_cast<int>(seen.size());
}
}  // namespace

TEST_CASE("compose follows the left-to-right rule") {
    auto p = Permutation::from_cycles(3, {{1, 2}});
    auto q = Permutation::from_cycles(3, {{2, 3}});
    CHECK(compose(p, q)(1) == 3);
    auto id = Permutation::identity(3);
    CHECK(compose(id, p) == p);
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), InputError);
}

TEST_CASE("inverse law and associativity on random permutations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 10;
        auto p = random_perm(rng, n);
        CHECK(compose(p, inverse(p)).is_identity());
        int m = 1 + trial % 8;
        auto a = random_perm(rng, m), b = random_perm(rng, m), c = random_perm(rng, m);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        auto pi = random_perm(rng, m);
        CHECK(cycle_type(compose(pi, compose(a, inverse(pi)))) == cycle_type(a));
    }
}

TEST_CASE("cycle_type examples") {
    auto s = Permutation::from_images({3, 5, 2, 4, 1});
    CHECK(cycle_type(s) == IntegerPartition({4, 1}));
    CHECK(cycle_type(Permutation::identity(5)) == IntegerPartition::ones(5));
    CHECK(cycle_type(Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})) == IntegerPartition({6}));
    auto cyc = s.cycles();
    CHECK(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{1, 3, 2, 5});
}

TEST_CASE("permutation input validation") {
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InputError);
    CHECK_THROWS_AS(Permutation::from_images({0, 1}), InputError);
    CHECK_THROWS_AS(IntegerPartition({2, 0}), InputError);
    CHECK_THROWS_AS(IntegerPartition::parse("3,x"), InputError);
}

TEST_CASE("z_of and class sizes") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(z_of(IntegerPartition::ones(n)) == factorial(n));
        CHECK(z_of(IntegerPartition({n})) == n);
    }
    CHECK(z_of(IntegerPartition({2, 1})) == 2);
    int transpositions = 0;
    for (auto& v : brute_perms(3))
        transpositions += cycle_type(Permutation::from_images(v)) == IntegerPartition({2, 1});
    CHECK(class_size(IntegerPartition({2, 1})) == transpositions);
    for (int n = 0; n <= 9; ++n) {
        BigInt total = 0;
        for (auto& l : partitions_of(n)) total += factorial(n) / z_of(l);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("class sizes match brute-force class populations") {
    for (int n = 1; n <= 6; ++n) {
        std::map<IntegerPartition, int> pop;
        for (auto& v : brute_perms(n)) ++pop[cycle_type(Permutation::from_images(v))];
        for (auto& l : partitions_of(n)) CHECK(class_size(l) == pop[l]);
    }
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    for (int n = 0; n <= 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == brute_partition_count(n));
    auto p4 = partitions_of(4);
    CHECK(p4.size() == 5);
    CHECK(p4.front() == IntegerPartition({4}));
    CHECK(p4.back() == IntegerPartition::ones(4));
    CHECK(partitions_of(6).size() == 11);
    for (size_t i = 1; i < p4.size(); ++i) CHECK(p4[i] < p4[i - 1]);
}

TEST_CASE("partition helpers") {
    IntegerPartition l({3, 1, 1});
    CHECK(l.conjugate() == IntegerPartition({3, 1, 1}));
    CHECK(IntegerPartition({4, 2}).conjugate() == IntegerPartition({2, 2, 1, 1}));
    CHECK(l.scaled(2) == IntegerPartition({6, 2, 2}));
    CHECK(IntegerPartition::parse("5,4,3") == IntegerPartition({5, 4, 3}));
    CHECK(l.str() == "3,1,1");
    CHECK(cycle_type(class_representative(l)) == l);
}

TEST_CASE("rank and unrank are inverse") {
    int img[6];
    for (std::uint64_t r = 0; r < 720; ++r) {
        perm_unrank(r, 6, img);
        CHECK(perm_rank(img, 6) == r);
    }
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(10) == 3628800);
}
