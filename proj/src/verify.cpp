#include "mapforge/verify.hpp"

#include "mapforge/bijector.hpp"
#include "mapforge/mapkit.hpp"
#include "mapforge/tamari.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace mapforge {

namespace {

std::string s(const BigInt& x) { return to_string(x); }
std::string s(const Rational& x) { return to_string(x); }

void guard(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

MapFilter planar_filter(std::optional<IntegerPartition> faces = {}) {
    MapFilter f;
    f.genus = 0;
    f.faces = std::move(faces);
    return f;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out;
}

}  // namespace

void VerifyReport::merge(const VerifyReport& o) {
    cases += o.cases;
    if (!o.ok) fail(o.failure);
}

VerifyReport verify_planar_counts(int n_max) {
    guard(n_max >= 1 && n_max <= 5, "planar counts limited to 1 <= n <= 5 (about 1 s at n = 5)");
    VerifyReport r;
    CatalanSuite cs = catalan_suite(n_max);
    std::vector<std::string> got;
    for (int n = 1; n <= n_max; ++n) {
        BigInt bf = count_rooted_maps(n, planar_filter());
        BigInt f = planar_map_formula(n);
        Rational ser = cs.M1.coeff({{"t", n}});
        r.expect(bf == f && ser == Rational(f),
                 "n = " + std::to_string(n) + ": enumeration " + s(bf) + ", formula " + s(f) + ", series " + s(ser));
        got.push_back(s(bf));
    }
    r.summary = "planar rooted maps " + join(got);
    return r;
}

VerifyReport verify_catalan(int order) {
    guard(order >= 1 && order <= 40, "catalan suite limited to order <= 40");
    VerifyReport r;
    CatalanSuite c = catalan_suite(order);
    TruncSeries t = TruncSeries::var(c.ring, "t");
    for (int n = 0; n <= order; ++n) {
        r.expect(c.T.coeff({{"t", n}}) == Rational(catalan(n)), "[t^" + std::to_string(n) + "] T");
        Rational dyck = n % 2 ? Rational(0) : Rational(catalan(n / 2));
        r.expect(c.D.coeff({{"t", n}}) == dyck, "[t^" + std::to_string(n) + "] D");
        r.expect(c.M1.coeff({{"t", n}}) == Rational(planar_map_formula(n)), "[t^" + std::to_string(n) + "] M(1)");
    }
    TruncSeries tree = t * c.T.pow(2) - c.T + Rational(1);
    r.expect(tree.is_zero(), "t T^2 - T + 1 residue " + tree.to_string());
    TruncSeries quad = t.pow(2) * c.M1.pow(2) * Rational(27) + (Rational(1) - t * Rational(18)) * c.M1 +
                       (t * Rational(16) - Rational(1));
    r.expect(quad.is_zero(), "27 t^2 M^2 + (1 - 18 t) M + 16 t - 1 residue " + quad.to_string());
    std::vector<std::string> head;
    for (int n = 0; n <= std::min(order, 5); ++n) head.push_back(s(c.T.coeff({{"t", n}})));
    r.summary = "T = " + join(head) + ", ...; residues zero to order " + std::to_string(order);
    return r;
}

VerifyReport verify_characters(int n) {
    guard(n >= 1 && n <= 9, "character orthogonality limited to n <= 9");
    VerifyReport r;
    auto parts = partitions_of(n);
    const size_t P = parts.size();
    std::vector<std::vector<BigInt>> chi(P, std::vector<BigInt>(P));
    for (size_t i = 0; i < P; ++i)
        for (size_t j = 0; j < P; ++j) chi[i][j] = mn_character(parts[i], parts[j]);
    for (size_t a = 0; a < P; ++a)
        for (size_t b = 0; b < P; ++b) {
            Rational row = 0;
            BigInt col = 0;
            for (size_t k = 0; k < P; ++k) {
                row += Rational(chi[a][k] * chi[b][k]) / Rational(z_of(parts[k]));
                col += chi[k][a] * chi[k][b];
            }
            r.expect(row == (a == b ? 1 : 0),
                     "rows " + parts[a].str() + " / " + parts[b].str() + " give " + s(row));
            r.expect(col == (a == b ? z_of(parts[a]) : BigInt(0)),
                     "columns " + parts[a].str() + " / " + parts[b].str() + " give " + s(col));
        }
    r.summary = "orthogonality over " + std::to_string(P) + " partitions of " + std::to_string(n);
    return r;
}

VerifyReport verify_frobenius(int n, int m) {
    VerifyReport r;
    for (int k = 1; k <= m; ++k) {
        auto bf = factorization_histogram_bf(n, k);
        auto parts = partitions_of(n);
        std::vector<IntegerPartition> key;
        std::function<void()> rec = [&] {
            if (static_cast<int>(key.size()) == k + 1) {
                std::vector<IntegerPartition> lambdas(key.begin(), key.end() - 1);
                BigInt got = count_factorizations_char(lambdas, key.back());
                auto it = bf.find(key);
                BigInt want = it == bf.end() ? BigInt(0) : it->second;
                std::string label;
                for (const auto& p : key) label += "[" + p.str() + "]";
                r.expect(got == want, label + ": characters " + s(got) + ", search " + s(want));
                return;
            }
            for (const auto& p : parts) {
                key.push_back(p);
                rec();
                key.pop_back();
            }
        };
        rec();
    }
    r.summary = std::to_string(r.cases) + " type tuples, n = " + std::to_string(n) + ", up to " +
                std::to_string(m) + " factors";
    return r;
}

VerifyReport verify_jm(int n) {
    guard(n >= 1 && n <= 8, "Jucys-Murphy check limited to n <= 8");
    VerifyReport r;
    for (int k = 1; k <= n; ++k) {
        auto got = jm_pi(k), want = jm_pi_expected(k);
        bool same = got.size() == want.size();
        for (size_t d = 0; same && d < got.size(); ++d) same = got[d] == want[d];
        r.expect(same, "Pi_" + std::to_string(k) + " differs from its class expansion");
    }
    r.summary = "Pi_n = sum t^{n - l(lambda)} K_lambda for n <= " + std::to_string(n);
    return r;
}

VerifyReport verify_hurwitz(int n, int r_max) {
    guard(n >= 1 && n <= 6 && r_max >= 0 && r_max <= 5, "Hurwitz check limited to n <= 6, r <= 5");
    VerifyReport r;
    for (int k = 1; k <= n; ++k)
        for (const auto& l : partitions_of(k))
            for (int q = 0; q <= r_max; ++q) {
                std::string tag = "lambda = " + l.str() + ", r = " + std::to_string(q);
                BigInt c = hurwitz_bf(l, q, false), cf = hurwitz_classical_formula(l, q);
                r.expect(c == cf, "classical " + tag + ": search " + s(c) + ", formula " + s(cf));
                BigInt mo = hurwitz_bf(l, q, true), mf = hurwitz_monotone_formula(l, q);
                r.expect(mo == mf, "monotone " + tag + ": search " + s(mo) + ", formula " + s(mf));
            }
    r.summary = std::to_string(r.cases) + " Hurwitz numbers";
    return r;
}

VerifyReport verify_littlewood(int m, int n) {
    guard(m >= 2 && n >= 1 && m * n <= 12, "Littlewood check limited to m >= 2, mn <= 12");
    VerifyReport r;
    for (const auto& th : partitions_of(m * n))
        for (const auto& l : partitions_of(n)) {
            auto c = littlewood_factor_check(th, l, m);
            r.expect(c.ok, "theta = " + th.str() + ", lambda = " + l.str() + ": " + s(c.lhs) + " vs " + s(c.rhs));
        }
    r.summary = "all θ ⊢ " + std::to_string(m * n);
    return r;
}

VerifyReport verify_quad(int m, int g, int n, const std::vector<int>& D, Marking marking) {
    guard(m >= 2 && g >= 0 && n >= 1 && m * n <= 9, "quadrangulation relation limited to mn <= 9");
    VerifyReport r;
    auto q = verify_quadrangulation_relation(m, g, n, D, marking);
    r.expect(q.ok, "m = " + std::to_string(m) + ", g = " + std::to_string(g) + ", n = " + std::to_string(n) +
                       ": lhs " + s(q.lhs) + ", rhs " + s(q.rhs));
    r.summary = "lhs = rhs = " + s(q.lhs);
    return r;
}

VerifyReport verify_quad_coeffs(int m_max, int k_sum) {
    guard(m_max >= 2 && m_max <= 8 && k_sum >= 0 && k_sum <= 10, "coefficient check limited to m <= 8, sum k <= 10");
    VerifyReport r;
    for (int m = 2; m <= m_max; ++m) {
        std::vector<int> k(m - 1, 0);
        std::function<void(int, int)> rec = [&](int slot, int left) {
            if (slot == m - 1) {
                auto q = quad_coeffs(m, k);
                std::string tag = "m = " + std::to_string(m) + ", k = (";
                for (size_t i = 0; i < k.size(); ++i) tag += (i ? "," : "") + std::to_string(k[i]);
                tag += "): d = " + s(q.d);
                r.expect(q.d > 0 && q.d % m == 0, tag);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                k[slot] = x;
                rec(slot + 1, left - x);
            }
        };
        rec(0, k_sum);
    }
    r.summary = std::to_string(r.cases) + " coefficients positive and divisible by m";
    return r;
}

VerifyReport verify_tamari(int n, int v_max) {
    guard(n >= 1 && n <= 7 && v_max >= 0 && v_max <= 5, "Tamari check limited to n <= 7, |v| <= 5");
    VerifyReport r;
    std::vector<std::string> usual, sync;
    for (int k = 1; k <= n; ++k) {
        BigInt c = tamari_interval_count(k), f = tamari_interval_formula(k);
        r.expect(c == f, "intervals of size " + std::to_string(k) + ": " + s(c) + " vs formula " + s(f));
        usual.push_back(s(c));
        auto a = sync_intervals(k);
        BigInt sf = sync_interval_formula(k);
        r.expect(BigInt(a.size()) == sf,
                 "synchronized intervals of size " + std::to_string(k) + ": " + std::to_string(a.size()) +
                     " vs formula " + s(sf));
        if (k <= 6) r.expect(a == sync_intervals_recursive(k), "recursive construction differs at size " + std::to_string(k));
        sync.push_back(std::to_string(a.size()));
    }
    for (int len = 0; len <= v_max; ++len) {
        BigInt total = 0;
        for (const auto& v : grid_words(len)) {
            auto cls = type_class_interval(v);
            auto nt = nu_tamari(v);
            total += cls.size();
            r.expect(lattices_isomorphic(cls, nt), "type class of " + v.word() + " is not its nu-Tamari lattice");
            r.expect(lattices_isomorphic(nt, nu_tamari(v.reversed_swapped()).dual()),
                     "duality fails for v = " + v.word());
        }
        r.expect(total == catalan(len + 1), "type classes of length " + std::to_string(len) + " do not partition");
    }
    r.summary = "intervals " + join(usual) + "; synchronized " + join(sync);
    return r;
}

VerifyReport verify_bijection(int e_max) {
    guard(e_max >= 2 && e_max <= 5, "bijection round trips limited to 5 edges (non-separable enumeration)");
    VerifyReport r;
    for (int n = 1; n < e_max; ++n)
        for (const auto& t : decorated_trees(n)) {
            auto m = rebuild_S(t);
            r.expect(explore_T(m) == t, "T(S(t)) != t for tree " + t.shape);
        }
    for (int e = 2; e <= e_max; ++e) {
        std::set<SyncInterval> images;
        auto maps = nonseparable_planar_maps(e);
        for (const auto& m : maps) {
            r.expect(root_equivalent(rebuild_S(explore_T(m)), m), "S(T(m)) != m at " + std::to_string(e) + " edges");
            auto iv = map_to_interval(m);
            images.insert(iv);
            r.expect(root_equivalent(interval_to_map(iv), m), "map -> interval -> map fails at " +
                                                                   std::to_string(e) + " edges");
        }
        r.expect(images.size() == maps.size() && images.size() == sync_intervals(e - 1).size(),
                 "map -> interval is not a bijection at " + std::to_string(e) + " edges");
    }
    for (int n = 1; n <= e_max; ++n)
        for (const auto& iv : sync_intervals(n)) {
            auto t = from_interval_R(iv);
            r.expect(to_interval_PQ(t) == iv, "PQ(R(I)) != I for " + iv.lower.word() + " / " + iv.upper.word());
            r.expect(from_interval_R(to_interval_PQ(t)) == t, "R(PQ(t)) != t for tree " + t.shape);
        }
    r.summary = std::to_string(r.cases) + " round trips up to " + std::to_string(e_max) + " edges";
    return r;
}

VerifyReport verify_series(FormVariant v) {
    VerifyReport r;
    auto add = [&](const SeriesCheck& c) { r.expect(c.ok, c.name + ": " + c.detail); };
    add(gamma_f0_check(8));
    add(f1_check(2, 6, v));
    add(l1_check(5));
    for (const auto& c : gamma_on_greek_check(6, 3, 3, v)) add(c);
    r.summary = std::to_string(r.cases) + " series identities" +
                (v == FormVariant::Printed ? " (published forms)" : " (corrected forms)");
    return r;
}

VerifyReport verify_triangulations() {
    VerifyReport r;
    Triangulations tr = triangulation_parametrizations(6);
    std::vector<std::string> got;
    for (int k = 1; k <= 2; ++k) {
        IntegerPartition faces(std::vector<int>(2 * k, 3));
        MapFilter fs = planar_filter(faces), fl = planar_filter(faces);
        fs.simple = true;
        fl.loopless = true;
        BigInt simple = count_rooted_maps(3 * k, fs);
        BigInt loopless = count_rooted_maps(3 * k, fl);
        Rational s0 = tr.S0.coeff({{"t", 3 * k}}), t0 = tr.T0.coeff({{"t", 3 * k}});
        std::string at = "[t^" + std::to_string(3 * k) + "]";
        r.expect(s0 == Rational(simple), at + " S0 = " + s(s0) + ", simple triangulations " + s(simple));
        r.expect(t0 == Rational(loopless), at + " T0 = " + s(t0) + ", loopless triangulations " + s(loopless));
        got.push_back(at + " S0 = " + s(s0) + ", T0 = " + s(t0));
    }
    r.summary = join(got);
    return r;
}

}  // namespace mapforge
