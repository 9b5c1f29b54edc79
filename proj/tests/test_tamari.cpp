#include "doctest.h"
#include "mapforge/tamari.hpp"

#include <algorithm>
#include <set>

using namespace mapforge;

TEST_CASE("Dyck path validation and statistics") {
    CHECK_THROWS_AS(DyckPath("du"), InputError);
    CHECK_THROWS_AS(DyckPath("uud"), InputError);
    CHECK_THROWS_AS(DyckPath("uxd"), InputError);
    CHECK(DyckPath("udud").contacts() == 3);
    CHECK(DyckPath("").contacts() == 1);
    std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n <= 7; ++n) CHECK(static_cast<int>(dyck_paths(n).size()) == catalan[n]);
}

TEST_CASE("distance function") {
    CHECK(distance_function(DyckPath("uudd")) == std::vector<int>{3, 1});
    CHECK(distance_function(DyckPath("ududud")) == std::vector<int>{1, 1, 1});
    CHECK(distance_function(DyckPath("uududd"))[0] == 5);
}

TEST_CASE("tamari order basics") {
    for (int n = 1; n <= 5; ++n) {
        std::string lo, hi(n, 'u');
        for (int i = 0; i < n; ++i) lo += "ud";
        hi += std::string(n, 'd');
        for (auto& p : dyck_paths(n)) {
            CHECK(tamari_leq(p, p));
            CHECK(tamari_leq(DyckPath(lo), p));
            CHECK(tamari_leq(p, DyckPath(hi)));
        }
    }
    CHECK_THROWS_AS(tamari_leq(DyckPath("ud"), DyckPath("uudd")), InputError);
}

TEST_CASE("distance criterion equals covering closure") {
    for (int n = 0; n <= 6; ++n) {
        auto l = tamari_lattice(n);
        auto paths = dyck_paths(n);
        for (int i = 0; i < l.size(); ++i)
            for (int j = 0; j < l.size(); ++j)
                CHECK(static_cast<bool>(l.leq[i][j]) == tamari_leq(DyckPath(l.elements[i]), DyckPath(l.elements[j])));
    }
}

TEST_CASE("tamari order is a partial order") {
    for (int n = 1; n <= 6; ++n) {
        auto l = tamari_lattice(n);
        int N = l.size();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i != j) CHECK_FALSE((l.leq[i][j] && l.leq[j][i]));
                if (!l.leq[i][j]) continue;
                for (int k = 0; k < N; ++k)
                    if (l.leq[j][k]) CHECK(l.leq[i][k]);
            }
    }
}

TEST_CASE("tamari interval counts") {
    std::vector<int> want{1, 3, 13, 68, 399};
    for (int n = 1; n <= 5; ++n) {
        CHECK(tamari_interval_count(n) == want[n - 1]);
        CHECK(tamari_interval_formula(n) == want[n - 1]);
    }
}

TEST_CASE("type of a path") {
    CHECK(type_of(DyckPath("ududud")).word() == "NN");
    CHECK(type_of(DyckPath("uuuddd")).word() == "EE");
    CHECK(type_of(DyckPath("")).word().empty());
    std::map<GridPath, int> classes;
    for (auto& p : dyck_paths(4)) ++classes[type_of(p)];
    CHECK(classes.size() == 8);
    int total = 0;
    for (auto& [t, c] : classes) total += c;
    CHECK(total == 14);
}

TEST_CASE("nu-Tamari lattices") {
    for (int k = 0; k <= 5; ++k) {
        std::string w;
        for (int i = 0; i < k; ++i) w += "NE";
        CHECK(lattices_isomorphic(nu_tamari(GridPath(w)), tamari_lattice(k)));
    }
    std::vector<int> catalan{1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 5; ++n) {
        int total = 0;
        for (auto& v : grid_words(n - 1)) total += nu_tamari(v).size();
        CHECK(total == catalan[n]);
    }
    auto one = nu_tamari(GridPath("E"));
    CHECK(one.size() == 1);
    CHECK(one.elements[0] == "E");
}

TEST_CASE("type classes are intervals isomorphic to nu-Tamari") {
    for (int len = 0; len <= 4; ++len)
        for (auto& v : grid_words(len)) {
            auto iv = type_class_interval(v);
            auto nt = nu_tamari(v);
            CHECK(lattices_isomorphic(iv, nt));
            // convexity: anything between two members has the same type
            auto full = tamari_lattice(len + 1);
            int bottom = -1, top = -1;
            for (int i = 0; i < iv.size(); ++i) {
                bool is_bottom = true, is_top = true;
                for (int j = 0; j < iv.size(); ++j) {
                    is_bottom &= static_cast<bool>(iv.leq[i][j]);
                    is_top &= static_cast<bool>(iv.leq[j][i]);
                }
                if (is_bottom) bottom = full.index_of(iv.elements[i]);
                if (is_top) top = full.index_of(iv.elements[i]);
            }
            REQUIRE(bottom >= 0);
            REQUIRE(top >= 0);
            int between = 0;
            for (int k = 0; k < full.size(); ++k) between += full.leq[bottom][k] && full.leq[k][top];
            CHECK(between == iv.size());
        }
}

TEST_CASE("reverse-swap duality") {
    CHECK(GridPath("NNE").reversed_swapped().word() == "NEE");
    for (int len = 0; len <= 4; ++len)
        for (auto& v : grid_words(len))
            CHECK(lattices_isomorphic(nu_tamari(v), nu_tamari(v.reversed_swapped()).dual()));
    Lattice chain;
    for (int i = 0; i < 5; ++i) {
        chain.elements.push_back(std::to_string(i));
        chain.up.push_back(i < 4 ? std::vector<int>{i + 1} : std::vector<int>{});
    }
    close_order(chain);
    CHECK(chain.interval_count() == 15);
    CHECK_FALSE(lattices_isomorphic(chain, tamari_lattice(3)));
}

TEST_CASE("synchronized intervals three ways") {
    std::vector<int> want{1, 2, 6, 22, 91, 408};
    auto series = sync_series(6);
    for (int n = 1; n <= 6; ++n) {
        auto a = sync_intervals(n);
        CHECK(static_cast<int>(a.size()) == want[n - 1]);
        CHECK(sync_interval_formula(n) == want[n - 1]);
        BigInt s = 0;
        for (auto& c : series[n]) s += c;
        CHECK(s == want[n - 1]);
        if (n <= 5) {
            auto b = sync_intervals_recursive(n);
            CHECK(a == b);
            // contact exponents agree with the series coefficients
            std::map<int, int> by_contacts;
            for (auto& iv : a) ++by_contacts[iv.lower.contacts() - 1];
            for (auto& [k, c] : by_contacts) CHECK(series[n][k] == c);
        }
        for (auto& iv : a) CHECK(is_sync_interval(iv.lower, iv.upper));
    }
    CHECK(sync_intervals(1).front().lower.word() == "ud");
}

TEST_CASE("synchronized intervals match intervals of all nu-Tamari lattices") {
    for (int n = 1; n <= 5; ++n) {
        BigInt total = 0;
        for (auto& v : grid_words(n - 1)) total += nu_tamari(v).interval_count();
        CHECK(total == sync_interval_formula(n));
    }
}

TEST_CASE("m-Tamari intervals") {
    for (int n = 1; n <= 3; ++n) CHECK(m_tamari(2, n).interval_count() == m_tamari_interval_formula(2, n));
    CHECK(m_tamari_interval_formula(2, 3) == 58);
    for (int n = 1; n <= 4; ++n) CHECK(m_tamari(1, n).interval_count() == tamari_interval_formula(n));
}
