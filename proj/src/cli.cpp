#include "mapforge/cli.hpp"

#include "mapforge/bijector.hpp"
#include "mapforge/charkit.hpp"
#include "mapforge/io.hpp"
#include "mapforge/mapkit.hpp"
#include "mapforge/parallel.hpp"
#include "mapforge/seriesforge.hpp"
#include "mapforge/tamari.hpp"
#include "mapforge/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace mapforge {

namespace {

enum class Format { Table, Json, Csv };

struct Ctx {
    Format format = Format::Table;
    std::ostream& out;
};

void guard(bool ok, const std::string& msg) {
    if (!ok) throw InputError("size guard: " + msg);
}

// Extrapolated wall time from a measured base size; factor(k) is the growth from size k-1 to k.
std::string estimate(double base_secs, int base, int n, double (*factor)(int)) {
    double secs = base_secs;
    for (int k = base + 1; k <= n; ++k) secs *= factor(k);
    std::ostringstream o;
    o.precision(2);
    if (secs < 120) o << "about " << std::fixed << secs << " s";
    else if (secs < 7200) o << "about " << static_cast<long>(secs / 60) << " min";
    else if (secs < 172800) o << "about " << static_cast<long>(secs / 3600) << " h";
    else o << "about " << std::scientific << secs / 86400 << " days";
    return o.str();
}

std::optional<IntegerPartition> opt_partition(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return IntegerPartition::parse(s);
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (int p : IntegerPartition::parse(s).parts()) out.push_back(p);
    return out;
}

std::string cycles_string(const Permutation& p) {
    std::string out;
    for (const auto& c : p.cycles()) {
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
        out += ')';
    }
    return out;
}

std::string map_text(const AnyMap& map) {
    Json j = map_to_json(map);
    std::ostringstream ss;
    ss << j["flavor"].get<std::string>() << " n=" << j["n"].get<int>();
    if (j.contains("m")) ss << " m=" << j["m"].get<int>();
    std::visit([&](const auto& rs) { ss << " genus=" << genus(rs); }, map);
    ss << "\n";
    for (const auto& [name, perm] : j["perms"].items())
        ss << name << ": " << cycles_string(permutation_from_json(perm)) << "\n";
    return ss.str();
}

void emit_value(const Ctx& c, const Json& record, const std::string& key) {
    const Json& v = record.at(key);
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    switch (c.format) {
        case Format::Json:
            c.out << record.dump(2) << "\n";
            break;
        case Format::Csv: {
            std::vector<std::string> head, row;
            for (const auto& [k, val] : record.items()) {
                if (k == "schema") continue;
                head.push_back(k);
                row.push_back(val.is_string() ? val.get<std::string>() : val.dump());
            }
            c.out << csv_line(head) << "\n" << csv_line(row) << "\n";
            break;
        }
        case Format::Table:
            c.out << text << "\n";
            break;
    }
}

Json record(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

void emit_rows(const Ctx& c, const std::vector<std::vector<std::string>>& rows, Json meta) {
    if (c.format == Format::Json) {
        Json arr = Json::array();
        for (size_t i = 1; i < rows.size(); ++i) {
            Json r = Json::object();
            for (size_t k = 0; k < rows[0].size(); ++k) r[rows[0][k]] = rows[i][k];
            arr.push_back(r);
        }
        meta["rows"] = arr;
        c.out << meta.dump(2) << "\n";
        return;
    }
    c.out << csv_table(rows);
}

// count

struct CountArgs {
    std::string flavor = "general";
    int edges = 0;
    int m = 2;
    std::optional<int> genus;
    std::string faces, vertices;
    bool loopless = false, simple = false;
};

int do_count(const Ctx& c, const CountArgs& a) {
    auto faces = opt_partition(a.faces);
    guard(a.edges >= 1, "need --edges >= 1");
    BigInt n;
    Json rec = record("count");
    rec["flavor"] = a.flavor;
    rec["edges"] = a.edges;
    if (a.flavor == "general") {
        guard(a.edges <= 5 || (faces && a.edges <= 6),
              "general maps limited to 5 edges, or 6 with --faces; n = " + std::to_string(a.edges) + " would take " +
                  estimate(1.2, 5, a.edges, [](int k) { return (2.0 * k - 1) * (2.0 * k); }));
        MapFilter f;
        f.genus = a.genus;
        f.faces = faces;
        f.vertices = opt_partition(a.vertices);
        f.loopless = a.loopless;
        f.simple = a.simple;
        n = count_rooted_maps(a.edges, f);
    } else {
        if (!a.vertices.empty() || a.loopless || a.simple)
            throw InputError("--vertices, --loopless and --simple apply to general maps only");
        if (a.flavor == "bipartite") {
            guard(a.edges <= 7, "bipartite maps limited to 7 edges; n = " + std::to_string(a.edges) +
                                    " would take " + estimate(5.6, 7, a.edges, [](int k) { return 1.0 * k * k; }));
            n = count_rooted_bipartite(a.edges, a.genus, faces);
        } else if (a.flavor == "constellation") {
            guard(a.m >= 2 && a.m <= 4 && a.edges <= 5, "constellations limited to m <= 4, n <= 5");
            n = count_rooted_constellations(a.m, a.edges, a.genus, faces);
            rec["m"] = a.m;
        } else if (a.flavor == "hypermap") {
            guard(a.m >= 2 && a.m * a.edges <= 10,
                  "hypermaps limited to mn <= 10; mn = " + std::to_string(a.m * a.edges) + " would take " +
                      estimate(46, 12, std::max(12, a.m * a.edges), [](int k) { return 1.0 * k; }));
            n = count_rooted_hypermaps(a.m, a.edges, a.genus, faces);
            rec["m"] = a.m;
        } else {
            throw InputError("unknown flavor '" + a.flavor + "'");
        }
    }
    if (a.genus) rec["genus"] = *a.genus;
    if (faces) rec["faces"] = to_json(*faces);
    rec["count"] = exact_json(n);
    emit_value(c, rec, "count");
    return kExitOk;
}

// char

struct CharArgs {
    std::string shape, type;
    int table = 0;
};

int do_char(const Ctx& c, const CharArgs& a) {
    if (a.table > 0) {
        guard(a.table <= 12, "character tables limited to n <= 12");
        Json meta = record("char");
        meta["n"] = a.table;
        emit_rows(c, character_table_rows(a.table), meta);
        return kExitOk;
    }
    if (a.shape.empty() || a.type.empty()) throw InputError("char needs --shape and --type, or --table N");
    IntegerPartition shape = IntegerPartition::parse(a.shape), type = IntegerPartition::parse(a.type);
    guard(shape.size() <= 60, "characters limited to n <= 60");
    Json rec = record("char");
    rec["shape"] = to_json(shape);
    rec["type"] = to_json(type);
    rec["value"] = exact_json(mn_character(shape, type));
    emit_value(c, rec, "value");
    return kExitOk;
}

// tamari

struct TamariArgs {
    int n = 0;
    int m = 1;
    bool sync = false;
    std::string v, lower, upper, canopy;
};

int do_tamari_intervals(const Ctx& c, const TamariArgs& a) {
    guard(a.n >= 1, "need --n >= 1");
    Json rec = record("tamari intervals");
    rec["n"] = a.n;
    BigInt count, formula;
    if (!a.canopy.empty()) {
        if (a.m != 1) throw InputError("--canopy works with m = 1 only");
        GridPath v(a.canopy);
        if (v.length() != a.n - 1) throw InputError("canopy length must be n - 1");
        guard(a.n <= 8, "synchronized interval enumeration limited to n <= 8");
        for (const auto& iv : sync_intervals(a.n))
            if (type_of(iv.lower) == v) count += 1;
        formula = nu_tamari(v).interval_count();
        rec["kind"] = "synchronized";
        rec["canopy"] = v.word();
    } else if (a.sync) {
        if (a.m != 1) throw InputError("--sync works with m = 1 only");
        guard(a.n <= 8, "synchronized interval enumeration limited to n <= 8");
        count = BigInt(sync_intervals(a.n).size());
        formula = sync_interval_formula(a.n);
        rec["kind"] = "synchronized";
    } else if (a.m == 1) {
        guard(a.n <= 8, "Tamari interval enumeration limited to n <= 8");
        count = tamari_interval_count(a.n);
        formula = tamari_interval_formula(a.n);
        rec["kind"] = "tamari";
    } else {
        guard(a.m >= 1 && a.m * a.n <= 12, "m-Tamari enumeration limited to mn <= 12");
        count = m_tamari(a.m, a.n).interval_count();
        formula = m_tamari_interval_formula(a.m, a.n);
        rec["kind"] = "m-tamari";
        rec["m"] = a.m;
    }
    if (count != formula)
        throw InvariantError("enumeration " + to_string(count) + " disagrees with formula " + to_string(formula));
    rec["count"] = exact_json(count);
    rec["formula"] = exact_json(formula);
    emit_value(c, rec, "count");
    return kExitOk;
}

int do_tamari_nu(const Ctx& c, const TamariArgs& a) {
    GridPath v(a.v);
    guard(v.length() <= 10, "nu-Tamari lattices limited to |v| <= 10");
    Lattice l = nu_tamari(v);
    Json rec = record("tamari nu");
    rec["v"] = v.word();
    rec["elements"] = l.size();
    rec["intervals"] = exact_json(l.interval_count());
    rec["dual_isomorphic"] = lattices_isomorphic(l, nu_tamari(v.reversed_swapped()).dual());
    if (c.format == Format::Table)
        c.out << "elements " << l.size() << ", intervals " << to_string(l.interval_count()) << "\n";
    else
        emit_value(c, rec, "intervals");
    return kExitOk;
}

void emit_interval(const Ctx& c, const SyncInterval& iv) {
    if (c.format == Format::Table)
        c.out << iv.lower.word() << " " << iv.upper.word() << "\n";
    else if (c.format == Format::Csv)
        c.out << "lower,upper\n" << iv.lower.word() << "," << iv.upper.word() << "\n";
    else
        c.out << interval_to_json(iv).dump(2) << "\n";
}

void emit_map(const Ctx& c, const AnyMap& m) {
    if (c.format == Format::Table)
        c.out << map_text(m);
    else
        c.out << map_to_json(m).dump(2) << "\n";
}

void emit_tree(const Ctx& c, const DecoratedTree& t) {
    if (c.format == Format::Table) {
        c.out << "shape " << t.shape << "\nlabels";
        for (int l : t.labels) c.out << " " << l;
        c.out << "\n";
    } else {
        c.out << tree_to_json(t).dump(2) << "\n";
    }
}

SyncInterval interval_arg(const std::string& lower, const std::string& upper) {
    if (lower.empty() || upper.empty()) throw InputError("need --lower and --upper");
    DyckPath lo(lower), up(upper);
    if (!is_sync_interval(lo, up)) throw InputError("not a synchronized interval: " + lower + " / " + upper);
    return {lo, up};
}

int do_tamari_dual(const Ctx& c, const TamariArgs& a) {
    SyncInterval iv = interval_arg(a.lower, a.upper);
    guard(iv.lower.size() <= 12, "duality limited to size 12");
    emit_interval(c, dual_interval(iv));
    return kExitOk;
}

// bijection

struct BijArgs {
    std::string in, lower, upper;
};

GeneralRotation nonseparable_input(const std::string& path) {
    GeneralRotation m = general_map_from_json(read_json(path));
    guard(m.edges() <= 12, "bijections limited to 12 edges");
    if (genus(m) != 0 || !is_nonseparable(m)) throw InputError("map must be planar and non-separable");
    return m;
}

int do_bijection(const Ctx& c, const std::string& which, const BijArgs& a) {
    if (which == "map-to-interval") {
        emit_interval(c, map_to_interval(nonseparable_input(a.in)));
    } else if (which == "interval-to-map") {
        emit_map(c, interval_to_map(interval_arg(a.lower, a.upper)));
    } else if (which == "map-to-tree") {
        emit_tree(c, explore_T(nonseparable_input(a.in)));
    } else if (which == "tree-to-map") {
        DecoratedTree t = tree_from_json(read_json(a.in));
        if (auto bad = tree_violation(t)) throw InputError("tree violates " + *bad);
        emit_map(c, rebuild_S(t));
    } else if (which == "tree-to-interval") {
        DecoratedTree t = tree_from_json(read_json(a.in));
        if (auto bad = tree_violation(t)) throw InputError("tree violates " + *bad);
        emit_interval(c, to_interval_PQ(t));
    } else {
        emit_tree(c, from_interval_R(interval_arg(a.lower, a.upper)));
    }
    return kExitOk;
}

// series

struct SeriesArgs {
    std::string target;
    int order = 6;
    int K = 2;
    int m = 2;
    int genus = 1;
};

int do_series(const Ctx& c, const SeriesArgs& a) {
    guard(a.order >= 0 && a.order <= 14, "series limited to order <= 14");
    guard(a.K >= 1 && a.K <= 8, "series limited to 1 <= K <= 8");
    if (a.target == "s0" || a.target == "t0") guard(a.order <= 30, "triangulation series limited to order <= 30");
    if (a.target == "f0") guard(a.m >= 2 && a.m <= 5, "constellations limited to m <= 5");
    if (a.target == "fg") guard(a.genus >= 0 && a.genus <= 3, "genus limited to 3");
    TruncSeries f = series_target(a.target, a.order, a.K, a.m, a.genus);
    auto rows = coefficient_rows(f);
    if (c.format == Format::Json) {
        Json rec = record("series");
        rec["target"] = a.target;
        rec["order"] = a.order;
        rec["variables"] = f.ring()->names;
        Json terms = Json::array();
        for (size_t i = 1; i < rows.size(); ++i) {
            std::vector<int> ex;
            for (size_t k = 0; k + 2 < rows[i].size(); ++k) ex.push_back(std::stoi(rows[i][k]));
            terms.push_back({{"exponents", ex}, {"numerator", rows[i][rows[i].size() - 2]},
                             {"denominator", rows[i].back()}});
        }
        rec["terms"] = terms;
        c.out << rec.dump(2) << "\n";
    } else {
        c.out << csv_table(rows);
    }
    return kExitOk;
}

// verify

struct VerifyArgs {
    int n = 4, m = 2, g = 0, r = 3, order = 12, v = 4, k = 6;
    std::string D;
    bool ordered = false;
    std::string variant = "printed";
};

int report(const Ctx& c, const std::string& check, const VerifyReport& r) {
    if (c.format == Format::Table) {
        if (r.ok)
            c.out << "OK (" << r.summary << ")\n";
        else
            c.out << "FAIL (" << r.failure << ")\n";
    } else {
        Json rec = record("verify");
        rec["check"] = check;
        rec["ok"] = r.ok;
        rec["cases"] = r.cases;
        rec["summary"] = r.summary;
        rec["failure"] = r.failure;
        emit_value(c, rec, "ok");
    }
    return r.ok ? kExitOk : kExitVerifyFailed;
}

int do_verify(const Ctx& c, const std::string& which, const VerifyArgs& a) {
    if (which == "planar") return report(c, which, verify_planar_counts(a.n));
    if (which == "catalan") return report(c, which, verify_catalan(a.order));
    if (which == "characters") return report(c, which, verify_characters(a.n));
    if (which == "frobenius") return report(c, which, verify_frobenius(a.n, a.m));
    if (which == "jm") return report(c, which, verify_jm(a.n));
    if (which == "hurwitz") return report(c, which, verify_hurwitz(a.n, a.r));
    if (which == "littlewood") return report(c, which, verify_littlewood(a.m, a.n));
    if (which == "quad")
        return report(c, which,
                      verify_quad(a.m, a.g, a.n, int_list(a.D), a.ordered ? Marking::Ordered : Marking::Unordered));
    if (which == "quad-coeffs") return report(c, which, verify_quad_coeffs(a.m, a.k));
    if (which == "tamari") return report(c, which, verify_tamari(a.n, a.v));
    if (which == "bijection") return report(c, which, verify_bijection(a.n));
    if (which == "series") {
        if (a.variant != "printed" && a.variant != "corrected") throw InputError("--variant is printed or corrected");
        return report(c, which, verify_series(a.variant == "printed" ? FormVariant::Printed : FormVariant::Corrected));
    }
    return report(c, which, verify_triangulations());
}

// convert

struct ConvertArgs {
    std::string in;
    std::string to = "json";
};

int do_convert(const Ctx& c, const ConvertArgs& a) {
    Json j = read_json(a.in);
    if (j.contains("flavor")) {
        AnyMap m = map_from_json(j);
        if (a.to == "json") {
            c.out << map_to_json(m).dump(2) << "\n";
        } else if (a.to == "cycles") {
            c.out << map_text(m);
        } else if (a.to == "canonical" || a.to == "dual") {
            if (!std::holds_alternative<GeneralRotation>(m)) throw InputError("--to " + a.to + " needs a general map");
            const auto& g = std::get<GeneralRotation>(m);
            c.out << map_to_json(a.to == "canonical" ? canonical_form(g) : dual(g)).dump(2) << "\n";
        } else if (a.to == "interval" || a.to == "tree") {
            GeneralRotation g = nonseparable_input(a.in);
            if (a.to == "interval")
                c.out << interval_to_json(map_to_interval(g)).dump(2) << "\n";
            else
                c.out << tree_to_json(explore_T(g)).dump(2) << "\n";
        } else {
            throw InputError("maps convert to json, cycles, canonical, dual, interval or tree");
        }
    } else if (j.contains("lower")) {
        SyncInterval iv = interval_from_json(j);
        if (a.to == "json")
            c.out << interval_to_json(iv).dump(2) << "\n";
        else if (a.to == "tree")
            c.out << tree_to_json(from_interval_R(iv)).dump(2) << "\n";
        else if (a.to == "map")
            c.out << map_to_json(interval_to_map(iv)).dump(2) << "\n";
        else
            throw InputError("intervals convert to json, tree or map");
    } else if (j.contains("children")) {
        DecoratedTree t = tree_from_json(j);
        if (auto bad = tree_violation(t)) throw InputError("tree violates " + *bad);
        if (a.to == "json")
            c.out << tree_to_json(t).dump(2) << "\n";
        else if (a.to == "interval")
            c.out << interval_to_json(to_interval_PQ(t)).dump(2) << "\n";
        else if (a.to == "map")
            c.out << map_to_json(rebuild_S(t)).dump(2) << "\n";
        else
            throw InputError("trees convert to json, interval or map");
    } else {
        throw InputError("unrecognised document: expected a map, tree or interval");
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mapforge: exact enumeration of maps, characters, Tamari intervals and map series"};
    app.name("mapforge");
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "table";
    int jobs_flag = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--jobs,-j", jobs_flag, "Worker threads for shardable enumerations (default MAPFORGE_JOBS or 1)")
        ->check(CLI::Range(1, 256));

    std::function<int(const Ctx&)> action;

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count rooted maps by brute force over rotation systems.\n"
                                              "Limits: general n <= 5 (6 with --faces), bipartite n <= 7,\n"
                                              "constellation m <= 4 and n <= 5, hypermap mn <= 10.");
    count->add_option("--flavor", ca.flavor, "general, bipartite, constellation or hypermap")
        ->check(CLI::IsMember({"general", "bipartite", "constellation", "hypermap"}));
    count->add_option("--edges,-n,--n", ca.edges, "Edges (hyperedges for constellations and hypermaps)")->required();
    count->add_option("--m", ca.m, "Colours for constellations and hypermaps");
    count->add_option("--genus,-g", ca.genus, "Genus filter");
    count->add_option("--faces", ca.faces, "Face degree profile, e.g. 3,3,3,3");
    count->add_option("--vertices", ca.vertices, "Vertex degree profile (general maps)");
    count->add_flag("--loopless", ca.loopless, "No loops (general maps)");
    count->add_flag("--simple", ca.simple, "No loops or multiple edges (general maps)");
    count->callback([&] { action = [&](const Ctx& c) { return do_count(c, ca); }; });

    CharArgs cha;
    auto* chr = app.add_subcommand("char", "Irreducible characters of S_n by Murnaghan-Nakayama.\n"
                                           "Limits: n <= 60 for single values, n <= 12 for --table.");
    chr->add_option("--shape", cha.shape, "Irreducible, e.g. 5,4,3");
    chr->add_option("--type", cha.type, "Conjugacy class, e.g. 3,3,2,2,1,1");
    chr->add_option("--table", cha.table, "Emit the full character table of S_N");
    chr->callback([&] { action = [&](const Ctx& c) { return do_char(c, cha); }; });

    TamariArgs ta;
    auto* tam = app.add_subcommand("tamari", "Tamari lattices and intervals");
    tam->require_subcommand(1, 1);
    auto* tint = tam->add_subcommand("intervals", "Count intervals by enumeration (checked against the formula).\n"
                                                  "Limits: n <= 8, mn <= 12 for --m.");
    tint->add_option("--n,-n", ta.n, "Size")->required();
    tint->add_option("--m", ta.m, "m-Tamari parameter");
    tint->add_flag("--sync", ta.sync, "Synchronized intervals only");
    tint->add_option("--canopy", ta.canopy, "Synchronized intervals with this canopy (N/E word of length n - 1),\n"
                                            "checked against the interval count of its nu-Tamari lattice");
    tint->callback([&] { action = [&](const Ctx& c) { return do_tamari_intervals(c, ta); }; });
    auto* tnu = tam->add_subcommand("nu", "Size and interval count of the nu-Tamari lattice of a N/E word (|v| <= 10)");
    tnu->add_option("--v", ta.v, "Word over N and E")->required();
    tnu->callback([&] { action = [&](const Ctx& c) { return do_tamari_nu(c, ta); }; });
    auto* tdual = tam->add_subcommand("dual", "Image of a synchronized interval under the duality");
    tdual->add_option("--lower", ta.lower)->required();
    tdual->add_option("--upper", ta.upper)->required();
    tdual->callback([&] { action = [&](const Ctx& c) { return do_tamari_dual(c, ta); }; });

    BijArgs ba;
    auto* bij = app.add_subcommand("bijection", "Non-separable planar maps, decorated trees and synchronized intervals");
    bij->require_subcommand(1, 1);
    for (const char* name :
         {"map-to-interval", "interval-to-map", "map-to-tree", "tree-to-map", "tree-to-interval", "interval-to-tree"}) {
        auto* sc = bij->add_subcommand(name, std::string("Apply ") + name);
        std::string which = name;
        if (which.rfind("interval-to", 0) == 0) {
            sc->add_option("--lower", ba.lower, "Lower Dyck word over u, d")->required();
            sc->add_option("--upper", ba.upper, "Upper Dyck word over u, d")->required();
        } else {
            sc->add_option("--in", ba.in, "JSON file, - for stdin")->required();
        }
        sc->callback([&, which] { action = [&, which](const Ctx& c) { return do_bijection(c, which, ba); }; });
    }

    SeriesArgs sa;
    auto* ser = app.add_subcommand("series", "Truncated generating series as coefficient tables.\n"
                                             "Targets: catalan, planar, s0, t0, f0, f1, fg, l1.\n"
                                             "Limits: order <= 14 (30 for s0, t0), K <= 8, genus <= 3.");
    ser->add_option("--target", sa.target)->required()->check(
        CLI::IsMember({"catalan", "planar", "s0", "t0", "f0", "f1", "fg", "l1"}));
    ser->add_option("--order", sa.order, "Truncation order in t");
    ser->add_option("--K,-K", sa.K, "Largest face variable p_K");
    ser->add_option("--m", sa.m, "Constellation parameter for f0");
    ser->add_option("--genus", sa.genus, "Genus for fg");
    ser->callback([&] { action = [&](const Ctx& c) { return do_series(c, sa); }; });

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Exhaustive checks; exit 1 with the first counterexample on failure");
    ver->require_subcommand(1, 1);
    struct VerifySpec {
        const char* name;
        const char* help;
        std::vector<std::string> opts;
    };
    const std::vector<VerifySpec> specs{
        {"planar", "Planar rooted map counts against the closed formula (n <= 5)", {"n"}},
        {"catalan", "Tree, Dyck and planar map series (order <= 40)", {"order"}},
        {"characters", "Character table orthogonality (n <= 9)", {"n"}},
        {"frobenius", "Character formula for factorization counts against search ((n!)^m <= 10^7)", {"n", "m"}},
        {"jm", "Jucys-Murphy product (n <= 8)", {"n"}},
        {"hurwitz", "Classical and monotone Hurwitz numbers (n <= 6, r <= 5)", {"n", "r"}},
        {"littlewood", "Littlewood factorization for all theta of mn (mn <= 12)", {"n", "m"}},
        {"quad", "Quadrangulation relation (mn <= 9)", {"n", "m", "g", "D", "ordered"}},
        {"quad-coeffs", "Positivity and divisibility of the relation coefficients (m <= 8, sum k <= 10)", {"m", "k"}},
        {"tamari", "Interval counts, type classes and duality (n <= 7, |v| <= 5)", {"n", "v"}},
        {"bijection", "Round trips of the map, tree and interval bijections (edges <= 5)", {"n"}},
        {"series", "Series identities for bipartite maps", {"variant"}},
        {"triangulations", "Triangulation series against map enumeration", {}},
    };
    for (const auto& sp : specs) {
        auto* sc = ver->add_subcommand(sp.name, sp.help);
        for (const auto& o : sp.opts) {
            if (o == "n") sc->add_option("--n,-n", va.n, "Size");
            if (o == "m") sc->add_option("--m", va.m, "Number of factors or colours");
            if (o == "g") sc->add_option("--g,--genus", va.g, "Genus");
            if (o == "r") sc->add_option("--r", va.r, "Number of transpositions");
            if (o == "order") sc->add_option("--order", va.order, "Truncation order");
            if (o == "v") sc->add_option("--v", va.v, "Largest type length");
            if (o == "k") sc->add_option("--k", va.k, "Bound on the sum of k");
            if (o == "D") sc->add_option("--D", va.D, "Allowed hyperface sizes, e.g. 2");
            if (o == "ordered") sc->add_flag("--ordered", va.ordered, "Ordered vertex markings");
            if (o == "variant")
                sc->add_option("--variant", va.variant, "printed (as published) or corrected")
                    ->check(CLI::IsMember({"printed", "corrected"}));
        }
        std::string which = sp.name;
        sc->callback([&, which] { action = [&, which](const Ctx& c) { return do_verify(c, which, va); }; });
    }

    ConvertArgs cva;
    auto* conv = app.add_subcommand("convert", "Convert map, tree and interval documents");
    conv->add_option("--in", cva.in, "JSON file, - for stdin")->required();
    conv->add_option("--to", cva.to, "json, cycles, canonical, dual, interval, tree or map");
    conv->callback([&] { action = [&](const Ctx& c) { return do_convert(c, cva); }; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Ctx ctx{format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table, out};
    const int saved_jobs = jobs();
    if (jobs_flag > 0) set_jobs(jobs_flag);
    int status = kExitOk;
    try {
        if (!action) throw InputError("no command given");
        status = action(ctx);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        status = kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        status = kExitVerifyFailed;
    }
    set_jobs(saved_jobs);
    return status;
}

}  // namespace mapforge
