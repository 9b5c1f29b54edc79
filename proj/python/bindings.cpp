#include "mapforge/bijector.hpp"
#include "mapforge/charkit.hpp"
#include "mapforge/cli.hpp"
#include "mapforge/io.hpp"
#include "mapforge/mapkit.hpp"
#include "mapforge/parallel.hpp"
#include "mapforge/seriesforge.hpp"
#include "mapforge/tamari.hpp"
#include "mapforge/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mapforge;

namespace {

py::int_ big(const BigInt& x) {
    std::string s = to_string(x);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::optional<IntegerPartition> part(const std::optional<std::vector<int>>& v) {
    if (!v) return std::nullopt;
    return IntegerPartition(*v);
}

Json parse(const std::string& s) {
    try {
        return Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw InputError(e.what());
    }
}

py::tuple interval_tuple(const SyncInterval& iv) { return py::make_tuple(iv.lower.word(), iv.upper.word()); }

SyncInterval interval_of(const std::string& lower, const std::string& upper) {
    SyncInterval iv{DyckPath(lower), DyckPath(upper)};
    if (!is_sync_interval(iv.lower, iv.upper)) throw InputError("not a synchronized interval");
    return iv;
}

py::tuple report(const VerifyReport& r) { return py::make_tuple(r.ok, r.summary, r.failure, r.cases); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration of maps, characters, Tamari intervals and map series";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("jobs", &jobs);
    m.def("set_jobs", &set_jobs, py::arg("n"));

    m.def(
        "count_rooted_maps",
        [](int n, std::optional<int> genus, std::optional<std::vector<int>> faces,
           std::optional<std::vector<int>> vertices, bool loopless, bool simple) {
            MapFilter f;
            f.genus = genus;
            f.faces = part(faces);
            f.vertices = part(vertices);
            f.loopless = loopless;
            f.simple = simple;
            BigInt c;
            {
                py::gil_scoped_release nogil;
                c = count_rooted_maps(n, f);
            }
            return big(c);
        },
        py::arg("n"), py::arg("genus") = py::none(), py::arg("faces") = py::none(), py::arg("vertices") = py::none(),
        py::arg("loopless") = false, py::arg("simple") = false);
    m.def(
        "count_rooted_bipartite",
        [](int n, std::optional<int> genus, std::optional<std::vector<int>> faces) {
            return big(count_rooted_bipartite(n, genus, part(faces)));
        },
        py::arg("n"), py::arg("genus") = py::none(), py::arg("faces") = py::none());
    m.def(
        "count_rooted_constellations",
        [](int mm, int n, std::optional<int> genus, std::optional<std::vector<int>> faces) {
            return big(count_rooted_constellations(mm, n, genus, part(faces)));
        },
        py::arg("m"), py::arg("n"), py::arg("genus") = py::none(), py::arg("faces") = py::none());
    m.def(
        "count_rooted_hypermaps",
        [](int mm, int n, std::optional<int> genus, std::optional<std::vector<int>> faces) {
            return big(count_rooted_hypermaps(mm, n, genus, part(faces)));
        },
        py::arg("m"), py::arg("n"), py::arg("genus") = py::none(), py::arg("faces") = py::none());
    m.def("planar_map_formula", [](int n) { return big(planar_map_formula(n)); }, py::arg("n"));

    // maps travel as JSON text in the documented schema
    m.def("map_genus", [](const std::string& j) {
        return std::visit([](const auto& rs) { return genus(rs); }, map_from_json(parse(j)));
    });
    m.def("canonical_form", [](const std::string& j) {
        return map_to_json(canonical_form(general_map_from_json(parse(j)))).dump();
    });
    m.def("dual_map", [](const std::string& j) { return map_to_json(dual(general_map_from_json(parse(j)))).dump(); });
    m.def("root_equivalent", [](const std::string& a, const std::string& b) {
        return root_equivalent(general_map_from_json(parse(a)), general_map_from_json(parse(b)));
    });
    m.def(
        "enumerate_rooted_maps",
        [](int n, std::optional<int> genus) {
            MapFilter f;
            f.genus = genus;
            std::vector<std::string> out;
            for (const auto& rs : enumerate_rooted_maps(n, f)) out.push_back(map_to_json(rs).dump());
            return out;
        },
        py::arg("n"), py::arg("genus") = py::none());
    m.def("nonseparable_planar_maps", [](int n) {
        std::vector<std::string> out;
        for (const auto& rs : nonseparable_planar_maps(n)) out.push_back(map_to_json(rs).dump());
        return out;
    });

    m.def("character", [](const std::vector<int>& shape, const std::vector<int>& type) {
        return big(mn_character(IntegerPartition(shape), IntegerPartition(type)));
    });
    m.def("character_table", &character_table_rows, py::arg("n"));
    m.def("count_factorizations", [](const std::vector<std::vector<int>>& lambdas, const std::vector<int>& mu) {
        std::vector<IntegerPartition> ls;
        for (const auto& l : lambdas) ls.emplace_back(l);
        return big(count_factorizations_char(ls, IntegerPartition(mu)));
    });
    m.def("m_core", [](const std::vector<int>& theta, int mm) { return m_core(IntegerPartition(theta), mm).parts(); });

    m.def("tamari_interval_count", [](int n) { return big(tamari_interval_count(n)); });
    m.def("sync_intervals", [](int n) {
        py::list out;
        for (const auto& iv : sync_intervals(n)) out.append(interval_tuple(iv));
        return out;
    });
    m.def("nu_tamari_size", [](const std::string& v) { return nu_tamari(GridPath(v)).size(); });
    m.def("dual_interval", [](const std::string& lo, const std::string& up) {
        return interval_tuple(dual_interval(interval_of(lo, up)));
    });

    m.def("map_to_interval", [](const std::string& j) {
        return interval_tuple(map_to_interval(general_map_from_json(parse(j))));
    });
    m.def("interval_to_map", [](const std::string& lo, const std::string& up) {
        return map_to_json(interval_to_map(interval_of(lo, up))).dump();
    });
    m.def("map_to_tree", [](const std::string& j) {
        return tree_to_json(explore_T(general_map_from_json(parse(j)))).dump();
    });
    m.def("tree_to_map", [](const std::string& j) {
        return map_to_json(rebuild_S(tree_from_json(parse(j)))).dump();
    });
    m.def("tree_to_interval", [](const std::string& j) {
        return interval_tuple(to_interval_PQ(tree_from_json(parse(j))));
    });
    m.def("interval_to_tree", [](const std::string& lo, const std::string& up) {
        return tree_to_json(from_interval_R(interval_of(lo, up))).dump();
    });

    m.def(
        "series",
        [](const std::string& target, int order, int K, int mm, int genus) {
            TruncSeries f = series_target(target, order, K, mm, genus);
            py::list terms;
            for (const auto& [mono, c] : f.terms())
                terms.append(py::make_tuple(py::tuple(py::cast(mono)), big(numerator(c)), big(denominator(c))));
            return py::make_tuple(f.ring()->names, terms);
        },
        py::arg("target"), py::arg("order") = 6, py::arg("K") = 2, py::arg("m") = 2, py::arg("genus") = 1);

    m.def("verify_planar_counts", [](int n) { return report(verify_planar_counts(n)); });
    m.def("verify_characters", [](int n) { return report(verify_characters(n)); });
    m.def("verify_littlewood", [](int mm, int n) { return report(verify_littlewood(mm, n)); });
    m.def("verify_tamari", [](int n, int v) { return report(verify_tamari(n, v)); });
    m.def("verify_bijection", [](int e) { return report(verify_bijection(e)); });
    m.def(
        "verify_series",
        [](bool corrected) { return report(verify_series(corrected ? FormVariant::Corrected : FormVariant::Printed)); },
        py::arg("corrected") = false);
    m.def("verify_triangulations", [] { return report(verify_triangulations()); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int st;
            {
                py::gil_scoped_release nogil;
                st = run_cli(args, out, err);
            }
            return py::make_tuple(st, out.str(), err.str());
        },
        py::arg("args"));
}
