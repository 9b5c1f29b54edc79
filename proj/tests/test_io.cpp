#include "doctest.h"
#include "mapforge/io.hpp"

#include "mapforge/charkit.hpp"

using namespace mapforge;

namespace {
Permutation C(int n, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }
}  // namespace

TEST_CASE("permutations and partitions") {
    Permutation p = C(4, {{1, 3, 2}});
    CHECK(to_json(p) == Json::parse("[3,1,2,4]"));
    CHECK(permutation_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(permutation_from_json(Json::parse("[1,1]")), InputError);
    CHECK_THROWS_AS(permutation_from_json(Json::parse("{}")), InputError);
    CHECK(partition_from_json(Json::parse("[3,1,1]")) == IntegerPartition({3, 1, 1}));
    CHECK(to_json(IntegerPartition({2, 2})) == Json::parse("[2,2]"));
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,3]")), InputError);
    CHECK(exact_json(factorial(25)) == "15511210043330985984000000");
    CHECK(exact_json(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("general maps round trip") {
    for (const auto& m : enumerate_rooted_maps(3)) {
        Json j = map_to_json(m);
        CHECK(j["schema"] == kSchema);
        CHECK(j["flavor"] == "general");
        CHECK(j["n"] == 3);
        CHECK(general_map_from_json(j) == m);
        CHECK(general_map_from_json(Json::parse(j.dump())) == m);
        // sigma and rho alone determine the map
        Json k = j;
        k["perms"].erase("phi");
        CHECK(general_map_from_json(k) == m);
    }
}

TEST_CASE("other flavors round trip") {
    Permutation b = C(3, {{1, 2}}), w = C(3, {{2, 3}});
    BipartiteRotation bip(b, w, inverse(compose(b, w)));
    AnyMap back = map_from_json(map_to_json(AnyMap(bip)));
    REQUIRE(std::holds_alternative<BipartiteRotation>(back));
    CHECK(std::get<BipartiteRotation>(back).phi == bip.phi);

    Permutation s1 = C(3, {{1, 2, 3}}), s2 = C(3, {{1, 2}});
    ConstellationRotation con({s1, s2}, inverse(compose(s1, s2)));
    Json cj = map_to_json(AnyMap(con));
    CHECK(cj["m"] == 2);
    CHECK(cj["perms"].contains("sigma2"));
    auto cb = std::get<ConstellationRotation>(map_from_json(cj));
    CHECK(cb.sigmas == con.sigmas);

    Permutation circ = C(4, {{1, 2, 3, 4}});
    HypermapRotation hyp(2, circ, inverse(compose(circ, HypermapRotation::bullet(2, 2))));
    auto hb = std::get<HypermapRotation>(map_from_json(map_to_json(AnyMap(hyp))));
    CHECK(hb.n == 2);
    CHECK(hb.phi == hyp.phi);
}

TEST_CASE("malformed map documents are rejected") {
    Json good = map_to_json(enumerate_rooted_maps(2).front());
    Json j = good;
    j["n"] = 3;
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j = good;
    j["schema"] = "mapforge/0";
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j = good;
    j["flavor"] = "torus";
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j = good;
    j["perms"]["rho"] = Json::parse("[1,2,3,4]");
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j = good;
    j["perms"].erase("rho");
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j = good;
    j["perms"]["sigma"] = Json::parse("[1,2,3,4]");
    CHECK_THROWS_AS(map_from_json(j), InputError);
    CHECK_THROWS_AS(map_from_json(Json::parse("[]")), InputError);
}

TEST_CASE("decorated trees and intervals round trip") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : decorated_trees(n)) {
            Json j = tree_to_json(t);
            CHECK(tree_from_json(Json::parse(j.dump())) == t);
        }
    DecoratedTree t{"uuddud", {3, -1}};
    Json j = tree_to_json(t);
    CHECK(j["children"][0]["children"][0]["label"] == 3);
    CHECK(j["children"][1]["label"] == -1);
    CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"label": 1})")), InputError);
    CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"children": [{"children": []}]})")), InputError);

    for (const auto& iv : sync_intervals(4)) CHECK(interval_from_json(interval_to_json(iv)) == iv);
    CHECK_THROWS_AS(interval_from_json(Json::parse(R"({"lower": "udud", "upper": "uudd"})")), InputError);
    CHECK_THROWS_AS(interval_from_json(Json::parse(R"({"lower": "udud"})")), InputError);
}

TEST_CASE("csv output") {
    CHECK(csv_line({"a", "b,c", "say \"hi\""}) == "a,\"b,c\",\"say \"\"hi\"\"\"");
    auto rows = character_table_rows(3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0][0] == "theta");
    for (const auto& r : rows)
        if (r[0] == "3")
            for (size_t k = 1; k < r.size(); ++k) CHECK(r[k] == "1");
    CHECK(csv_table(rows).find("\"2,1\"") != std::string::npos);
}
