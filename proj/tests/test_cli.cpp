#include "doctest.h"
#include "mapforge/cli.hpp"
#include "mapforge/io.hpp"
#include "mapforge/tamari.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mapforge;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int st = run_cli(args, out, err);
    return {st, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "mapforge_test_" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("documented examples") {
    CHECK(run({"count", "--flavor", "general", "--edges", "3", "--genus", "0"}).out == "54\n");
    CHECK(run({"tamari", "intervals", "--n", "4", "--sync"}).out == "22\n");
    auto v = run({"verify", "littlewood", "--m", "2", "--n", "2"});
    CHECK(v.status == 0);
    CHECK(v.out == "OK (all θ ⊢ 4)\n");
    CHECK(run({"char", "--shape", "5,4,3", "--type", "3,3,2,2,1,1"}).out == "-2\n");
}

TEST_CASE("count flavors") {
    CHECK(run({"count", "--edges", "2"}).out == "10\n");
    CHECK(run({"count", "--flavor", "bipartite", "--edges", "2", "--genus", "0"}).out == "3\n");
    CHECK(run({"count", "--edges", "6", "--genus", "0", "--faces", "3,3,3,3", "--loopless"}).out == "4\n");
    auto j = Json::parse(run({"count", "--edges", "3", "--genus", "0", "--format", "json"}).out);
    CHECK(j["schema"] == "mapforge/1");
    CHECK(j["count"] == "54");
    auto csv = run({"--format", "csv", "count", "--edges", "1"}).out;
    CHECK(csv.find("count") != std::string::npos);
    CHECK(csv.find("\n") != csv.rfind("\n"));
}

TEST_CASE("output does not depend on the job count") {
    auto a = run({"count", "--edges", "4", "--jobs", "1"});
    auto b = run({"count", "--edges", "4", "--jobs", "4"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "706\n");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"count"}).status == 2);
    CHECK(run({"count", "--edges", "3", "--bogus"}).status == 2);
    CHECK(run({"count", "--flavor", "torus", "--edges", "3"}).status == 2);
    auto big = run({"count", "--edges", "9"});
    CHECK(big.status == 2);
    CHECK(big.err.find("size guard") != std::string::npos);
    CHECK(run({"char", "--shape", "3", "--type", "2"}).status == 2);
    CHECK(run({"tamari", "intervals", "--n", "30"}).status == 2);
    CHECK(run({"series", "--target", "f7"}).status == 2);
    CHECK(run({"bijection", "map-to-interval", "--in", "/nonexistent.json"}).status == 2);
    CHECK(run({"--jobs", "0", "count", "--edges", "2"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("verification failure exits with status 1 and reports the first counterexample") {
    auto pr = run({"verify", "series"});
    CHECK(pr.status == 1);
    CHECK(pr.out.rfind("FAIL (", 0) == 0);
    CHECK(pr.out.find("F1") != std::string::npos);
    auto co = run({"verify", "series", "--variant", "corrected"});
    CHECK(co.status == 0);
    auto j = Json::parse(run({"--format", "json", "verify", "series"}).out);
    CHECK(j["ok"] == false);
    CHECK_FALSE(j["failure"].get<std::string>().empty());
}

TEST_CASE("verify subcommands are idempotent") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"verify", "planar", "--n", "3"}, {"verify", "catalan", "--order", "8"},
          {"verify", "characters", "--n", "5"}, {"verify", "frobenius", "--n", "3", "--m", "2"},
          {"verify", "jm", "--n", "4"}, {"verify", "hurwitz", "--n", "3", "--r", "2"},
          {"verify", "quad", "--m", "2", "--g", "1", "--n", "2", "--D", "2"}, {"verify", "quad-coeffs", "--m", "3"},
          {"verify", "tamari", "--n", "4", "--v", "3"}, {"verify", "bijection", "--n", "4"},
          {"verify", "triangulations"}}) {
        CAPTURE(args[1]);
        auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out.rfind("OK (", 0) == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("series tables") {
    auto r = run({"series", "--target", "catalan", "--order", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("t,numerator,denominator\n", 0) == 0);
    CHECK(r.out.find("\n5,42,1\n") != std::string::npos);
    auto f1 = run({"series", "--target", "f1", "--order", "4", "--K", "1"});
    CHECK(f1.out.rfind("t,x,p1,numerator,denominator\n", 0) == 0);
    auto j = Json::parse(run({"series", "--target", "l1", "--order", "4", "--K", "4", "--format", "json"}).out);
    CHECK(j["variables"].size() == 6);
    CHECK(j["terms"][0]["exponents"] == Json::parse("[3,0,0,0,1,0]"));
    CHECK(j["terms"][0]["denominator"] == "3");
    CHECK_FALSE(j["terms"].empty());
    for (const char* t : {"planar", "s0", "t0", "f0", "fg"})
        CHECK(run({"series", "--target", t, "--order", "6"}).status == 0);
}

TEST_CASE("bijection and convert through JSON files") {
    auto maps = nonseparable_planar_maps(4);
    REQUIRE_FALSE(maps.empty());
    for (size_t i = 0; i < maps.size(); ++i) {
        std::string path = temp_file("map.json", map_to_json(maps[i]).dump());
        auto r = run({"bijection", "map-to-interval", "--in", path, "--format", "json"});
        REQUIRE(r.status == 0);
        SyncInterval iv = interval_from_json(Json::parse(r.out));
        CHECK(iv == map_to_interval(maps[i]));
        auto back = run({"bijection", "interval-to-map", "--lower", iv.lower.word(), "--upper", iv.upper.word(),
                         "--format", "json"});
        CHECK(root_equivalent(general_map_from_json(Json::parse(back.out)), maps[i]));

        auto tr = run({"bijection", "map-to-tree", "--in", path, "--format", "json"});
        std::string tpath = temp_file("tree.json", tr.out);
        auto m2 = run({"bijection", "tree-to-map", "--in", tpath, "--format", "json"});
        CHECK(root_equivalent(general_map_from_json(Json::parse(m2.out)), maps[i]));
        auto iv2 = run({"bijection", "tree-to-interval", "--in", tpath, "--format", "json"});
        CHECK(interval_from_json(Json::parse(iv2.out)) == iv);

        auto canon = run({"convert", "--in", path, "--to", "canonical"});
        std::string cpath = temp_file("canon.json", canon.out);
        CHECK(run({"convert", "--in", cpath, "--to", "canonical"}).out == canon.out);
        CHECK(run({"convert", "--in", path, "--to", "json"}).out == map_to_json(maps[i]).dump(2) + "\n");
        std::remove(tpath.c_str());
        std::remove(cpath.c_str());
        std::remove(path.c_str());
    }
    std::string ivpath = temp_file("iv.json", interval_to_json(sync_intervals(3)[1]).dump());
    CHECK(run({"convert", "--in", ivpath, "--to", "map"}).status == 0);
    CHECK(run({"convert", "--in", ivpath, "--to", "cycles"}).status == 2);
    std::remove(ivpath.c_str());
    std::string bad = temp_file("bad.json", "{not json");
    CHECK(run({"convert", "--in", bad}).status == 2);
    std::remove(bad.c_str());
}

TEST_CASE("synchronized intervals split by canopy") {
    int total = 0;
    for (const auto& v : grid_words(3)) {
        auto r = run({"tamari", "intervals", "--n", "4", "--sync", "--canopy", v.word()});
        REQUIRE(r.status == 0);
        total += std::stoi(r.out);
    }
    CHECK(total == 22);
    CHECK(run({"tamari", "intervals", "--n", "4", "--canopy", "NEN"}).out == "3\n");
    CHECK(run({"tamari", "intervals", "--n", "4", "--canopy", "NE"}).status == 2);
}

TEST_CASE("tamari nu and dual") {
    auto r = run({"tamari", "nu", "--v", "NENENENE"});
    CHECK(r.out == "elements 14, intervals 68\n");
    auto d = run({"tamari", "dual", "--lower", "udud", "--upper", "udud"});
    CHECK(d.status == 0);
    CHECK(run({"tamari", "dual", "--lower", "uudd", "--upper", "udud"}).status == 2);
}
