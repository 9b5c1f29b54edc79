#include "mapforge/io.hpp"

#include "mapforge/charkit.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace mapforge {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

void check_schema(const Json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
        throw InputError("unsupported schema " + j.at("schema").dump());
}

Permutation perm_field(const Json& perms, const std::string& key) {
    if (!perms.contains(key)) throw InputError("missing permutation '" + key + "'");
    return permutation_from_json(perms.at(key));
}

}  // namespace

Json to_json(const Permutation& p) { return Json(p.images()); }

Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("permutation must be a JSON array");
    std::vector<int> img;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("permutation entries must be integers");
        img.push_back(v.get<int>());
    }
    return Permutation::from_images(img);
}

Json to_json(const IntegerPartition& p) { return Json(p.parts()); }

IntegerPartition partition_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw InputError("partition must be decreasing");
    return IntegerPartition(parts);
}

Json exact_json(const BigInt& x) { return to_string(x); }
Json exact_json(const Rational& x) { return to_string(x); }

std::string flavor_name(const AnyMap& map) {
    static const char* names[] = {"general", "bipartite", "constellation", "hypermap"};
    return names[map.index()];
}

Json map_to_json(const GeneralRotation& map) { return map_to_json(AnyMap(map)); }

Json map_to_json(const AnyMap& map) {
    Json j{{"schema", kSchema}, {"flavor", flavor_name(map)}};
    Json perms = Json::object();
    std::visit(
        [&](const auto& rs) {
            using T = std::decay_t<decltype(rs)>;
            if constexpr (std::is_same_v<T, GeneralRotation>) {
                j["n"] = rs.edges();
                perms["phi"] = to_json(rs.phi);
                perms["rho"] = to_json(rs.rho);
                perms["sigma"] = to_json(rs.sigma());
            } else if constexpr (std::is_same_v<T, BipartiteRotation>) {
                j["n"] = rs.edges();
                perms["sigma_black"] = to_json(rs.sigma_black);
                perms["sigma_white"] = to_json(rs.sigma_white);
                perms["phi"] = to_json(rs.phi);
            } else if constexpr (std::is_same_v<T, ConstellationRotation>) {
                j["n"] = rs.hyperedges();
                j["m"] = rs.m;
                for (int i = 0; i < rs.m; ++i) perms["sigma" + std::to_string(i + 1)] = to_json(rs.sigmas[i]);
                perms["phi"] = to_json(rs.phi);
            } else {
                j["n"] = rs.n;
                j["m"] = rs.m;
                perms["sigma_circ"] = to_json(rs.sigma_circ);
                perms["phi"] = to_json(rs.phi);
            }
        },
        map);
    j["perms"] = perms;
    return j;
}

AnyMap map_from_json(const Json& j) {
    check_schema(j);
    const Json& fl = field(j, "flavor");
    if (!fl.is_string()) throw InputError("flavor must be a string");
    const std::string flavor = fl.get<std::string>();
    const int n = int_field(j, "n");
    const Json& perms = field(j, "perms");
    if (!perms.is_object()) throw InputError("perms must be an object");
    auto check_n = [&](int got) {
        if (got != n) throw InputError("field n = " + std::to_string(n) + " disagrees with the permutations");
    };
    if (flavor == "general") {
        GeneralRotation rs;
        if (perms.contains("phi"))
            rs = GeneralRotation(perm_field(perms, "phi"), perm_field(perms, "rho"));
        else
            rs = GeneralRotation::from_sigma_rho(perm_field(perms, "sigma"), perm_field(perms, "rho"));
        if (perms.contains("phi") && perms.contains("sigma") && !(rs.sigma() == perm_field(perms, "sigma")))
            throw InputError("sigma is not rho composed with phi");
        check_n(rs.edges());
        return rs;
    }
    if (flavor == "bipartite") {
        BipartiteRotation rs(perm_field(perms, "sigma_black"), perm_field(perms, "sigma_white"),
                             perm_field(perms, "phi"));
        check_n(rs.edges());
        return rs;
    }
    const int m = int_field(j, "m");
    if (flavor == "constellation") {
        if (m < 2) throw InputError("constellation needs m >= 2");
        std::vector<Permutation> sigmas;
        for (int i = 1; i <= m; ++i) sigmas.push_back(perm_field(perms, "sigma" + std::to_string(i)));
        ConstellationRotation rs(sigmas, perm_field(perms, "phi"));
        check_n(rs.hyperedges());
        return rs;
    }
    if (flavor == "hypermap") {
        HypermapRotation rs(m, perm_field(perms, "sigma_circ"), perm_field(perms, "phi"));
        check_n(rs.n);
        return rs;
    }
    throw InputError("unknown flavor '" + flavor + "'");
}

GeneralRotation general_map_from_json(const Json& j) {
    AnyMap m = map_from_json(j);
    if (!std::holds_alternative<GeneralRotation>(m)) throw InputError("expected a general map");
    return std::get<GeneralRotation>(m);
}

Json tree_to_json(const DecoratedTree& t) {
    auto nd = t.nodes();
    std::function<Json(int)> rec = [&](int v) -> Json {
        if (v != 0 && nd[v].children.empty()) return Json{{"label", t.labels[nd[v].leaf]}};
        Json ch = Json::array();
        for (int c : nd[v].children) ch.push_back(rec(c));
        return Json{{"children", ch}};
    };
    Json j = rec(0);
    j["schema"] = kSchema;
    return j;
}

DecoratedTree tree_from_json(const Json& j) {
    check_schema(j);
    DecoratedTree t;
    std::function<void(const Json&, bool)> rec = [&](const Json& node, bool root) {
        if (!node.is_object()) throw InputError("tree node must be an object");
        if (node.contains("children")) {
            const Json& ch = node.at("children");
            if (!ch.is_array()) throw InputError("children must be an array");
            if (!root && ch.empty()) throw InputError("leaf must carry a label");
            for (const auto& c : ch) {
                t.shape.push_back('u');
                rec(c, false);
                t.shape.push_back('d');
            }
            return;
        }
        if (root) throw InputError("tree root needs children");
        t.labels.push_back(int_field(node, "label"));
    };
    rec(j, true);
    return t;
}

Json interval_to_json(const SyncInterval& iv) {
    return Json{{"schema", kSchema}, {"lower", iv.lower.word()}, {"upper", iv.upper.word()}};
}

SyncInterval interval_from_json(const Json& j) {
    check_schema(j);
    const Json& lo = field(j, "lower");
    const Json& up = field(j, "upper");
    if (!lo.is_string() || !up.is_string()) throw InputError("interval endpoints must be strings");
    SyncInterval iv{DyckPath(lo.get<std::string>()), DyckPath(up.get<std::string>())};
    if (!is_sync_interval(iv.lower, iv.upper)) throw InputError("not a synchronized interval");
    return iv;
}

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") == std::string::npos) {
            out += c;
            continue;
        }
        out += '"';
        for (char ch : c) {
            if (ch == '"') out += '"';
            out += ch;
        }
        out += '"';
    }
    return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& r : rows) out += csv_line(r) + "\n";
    return out;
}

std::vector<std::vector<std::string>> character_table_rows(int n) {
    auto parts = partitions_of(n);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"theta"};
    for (const auto& mu : parts) header.push_back(mu.str());
    rows.push_back(header);
    for (const auto& theta : parts) {
        std::vector<std::string> r{theta.str()};
        for (const auto& mu : parts) r.push_back(to_string(mn_character(theta, mu)));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace mapforge
