#include "doctest.h"
#include "mapforge/bijector.hpp"

#include <algorithm>
#include <set>

using namespace mapforge;

namespace {
GeneralRotation double_edge() {
    return canonical_form(GeneralRotation::from_sigma_rho(Permutation::from_cycles(4, {{1, 3}, {2, 4}}),
                                                          Permutation::from_cycles(4, {{1, 2}, {3, 4}})));
}
}  // namespace

TEST_CASE("tree structure from contour words") {
    DecoratedTree t{"uuddud", {-1, -1}};
    auto nd = t.nodes();
    REQUIRE(nd.size() == 4);
    CHECK(nd[0].children == std::vector<int>{1, 3});
    CHECK(nd[2].leaf == 0);
    CHECK(nd[3].leaf == 1);
    CHECK(nd[2].depth == 2);
    CHECK_THROWS_AS(DecoratedTree({"udd", {}}).nodes(), InputError);
    CHECK_THROWS_AS(DecoratedTree({"ud", {}}).nodes(), InputError);
}

TEST_CASE("decorated tree conditions") {
    CHECK(is_decorated(DecoratedTree{"ud", {-1}}));
    CHECK(tree_violation(DecoratedTree{"ud", {0}}) == std::string("C1"));
    CHECK(tree_violation(DecoratedTree{"uuddud", {0, -1}}) == std::string("C2"));
    CHECK(is_decorated(DecoratedTree{"uuddud", {-1, -1}}));
    // depth-1 node with leaves labeled 0 then -1 is fine, but a leaf labeled 1
    // after a smaller label inside a child subtree of a depth-1 node is not
    CHECK(is_decorated(DecoratedTree{"uududd", {0, -1}}));
    CHECK(tree_violation(DecoratedTree{"uuuddudddd", {}}) == std::string("shape"));
    CHECK(tree_violation(DecoratedTree{"uuuddudd" "d", {}}) == std::string("shape"));
    CHECK(tree_violation(DecoratedTree{"uuuddduudd", {-1, 1, 0}}).has_value());
}

TEST_CASE("smallest cases") {
    auto t = explore_T(double_edge());
    CHECK(t == DecoratedTree{"ud", {-1}});
    CHECK(root_equivalent(rebuild_S(t), double_edge()));
    auto iv = to_interval_PQ(t);
    CHECK(iv.lower.word() == "ud");
    CHECK(iv.upper.word() == "ud");
    CHECK(from_interval_R({DyckPath("ud"), DyckPath("ud")}) == t);
    DecoratedTree path{"uudd", {-1}};
    CHECK(charges(path) == std::vector<int>{1});
    auto iv2 = to_interval_PQ(path);
    CHECK(iv2.lower.word() == "uudd");
    CHECK(iv2.upper.word() == "uudd");
}

TEST_CASE("invalid inputs are rejected") {
    GeneralRotation single(Permutation::from_cycles(2, {{1, 2}}), Permutation::from_cycles(2, {{1, 2}}));
    CHECK_THROWS_AS(explore_T(single), InputError);
    MapFilter f;
    f.genus = 0;
    for (auto& m : enumerate_rooted_maps(3, f))
        if (!is_nonseparable(m)) CHECK_THROWS_AS(explore_T(m), InputError);
    CHECK_THROWS_AS(rebuild_S(DecoratedTree{"ud", {0}}), InputError);
    CHECK_THROWS_AS(from_interval_R({DyckPath("uudd"), DyckPath("udud")}), InputError);
}

TEST_CASE("counting chain") {
    std::vector<int> want{1, 2, 6, 22, 91};
    for (int n = 1; n <= 5; ++n) {
        CHECK(static_cast<int>(decorated_trees(n).size()) == want[n - 1]);
        CHECK(static_cast<int>(sync_intervals(n).size()) == want[n - 1]);
        if (n <= 4) CHECK(static_cast<int>(nonseparable_planar_maps(n + 1).size()) == want[n - 1]);
    }
}

TEST_CASE("T and S are inverse") {
    for (int e = 2; e <= 5; ++e) {
        std::set<DecoratedTree> seen;
        for (auto& m : nonseparable_planar_maps(e)) {
            auto t = explore_T(m);
            CHECK(is_decorated(t));
            CHECK(t.edges() == e - 1);
            seen.insert(t);
            CHECK(root_equivalent(rebuild_S(t), m));
        }
        CHECK(seen.size() == decorated_trees(e - 1).size());
    }
    for (int n = 1; n <= 4; ++n)
        for (auto& t : decorated_trees(n)) {
            auto m = rebuild_S(t);
            CHECK(genus(m) == 0);
            CHECK(is_nonseparable(m));
            CHECK(explore_T(m) == t);
        }
}

TEST_CASE("PQ and R are inverse") {
    for (int n = 1; n <= 5; ++n) {
        std::set<SyncInterval> images;
        for (auto& t : decorated_trees(n)) {
            auto ch = charges(t);
            int total = 0;
            for (int c : ch) total += c;
            int internal = n - static_cast<int>(t.labels.size());
            CHECK(total == internal);
            CHECK(std::count(t.labels.begin(), t.labels.end(), -1) >= 1);
            auto iv = to_interval_PQ(t);
            CHECK(type_of(iv.lower) == type_of(iv.upper));
            CHECK(is_sync_interval(iv.lower, iv.upper));
            CHECK(from_interval_R(iv) == t);
            images.insert(iv);
        }
        auto all = sync_intervals(n);
        CHECK(std::set<SyncInterval>(all.begin(), all.end()) == images);
        for (auto& iv : all) {
            auto t = from_interval_R(iv);
            CHECK(is_decorated(t));
            CHECK(to_interval_PQ(t) == iv);
        }
    }
}

TEST_CASE("composite map to interval bijection") {
    for (int e = 2; e <= 5; ++e) {
        std::set<SyncInterval> images;
        for (auto& m : nonseparable_planar_maps(e)) {
            auto iv = map_to_interval(m);
            images.insert(iv);
            CHECK(root_equivalent(interval_to_map(iv), m));
        }
        CHECK(images.size() == sync_intervals(e - 1).size());
    }
}

TEST_CASE("map duality corresponds to the reverse-swap involution on intervals") {
    for (int n = 1; n <= 5; ++n)
        for (auto& iv : sync_intervals(n)) {
            auto di = dual_interval(iv);
            CHECK(type_of(di.lower) == type_of(iv.lower).reversed_swapped());
            CHECK(dual_interval(di) == iv);
            auto m = interval_to_map(iv);
            auto dm = transported_dual(m);
            CHECK(is_nonseparable(dm));
            CHECK(map_to_interval(dm) == di);
        }
}
