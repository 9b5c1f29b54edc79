#include "doctest.h"
#include "mapforge/mapkit.hpp"
#include "mapforge/seriesforge.hpp"

#include <algorithm>
#include <random>

using namespace mapforge;

namespace {

const SeriesCheck& find_check(const std::vector<SeriesCheck>& all, const std::string& name) {
    for (const auto& c : all)
        if (c.name == name) return c;
    FAIL("missing check " << name);
    return all.front();
}

TruncSeries random_series(const RingPtr& R, std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 5), coef(-3, 3), ex(0, 2);
    TruncSeries f(R);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        TruncSeries::Mono m(R->size());
        for (auto& e : m) e = ex(rng);
        f.add_term(m, coef(rng));
    }
    return f;
}

// [t^n x^a p_lambda] F_{m,0} from labelled genus-zero constellations, lambda = 1^{n-a}.
TruncSeries planar_oracle(int m, int order, const RingPtr& tx) {
    TruncSeries out(tx, 1);
    for (int n = 1; n <= order; ++n) {
        for (const auto& [k, v] : constellation_histogram(m, n)) {
            if (k.genus != 0) continue;
            std::vector<int> rest = k.phi_type.parts();
            auto it = std::find(rest.begin(), rest.end(), k.root_len);
            if (it == rest.end()) continue;
            rest.erase(it);
            if (std::any_of(rest.begin(), rest.end(), [](int part) { return part != 1; })) continue;
            TruncSeries::Mono mono(tx->size(), 0);
            mono[tx->index("t")] = n;
            mono[tx->index("x")] = k.root_len;
            mono[tx->index("p1")] = n - k.root_len;
            out.add_term(mono, Rational(v) / Rational(factorial(n - 1)));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Catalan suite expansions") {
    CatalanSuite c = catalan_suite(12);
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n) CHECK(c.T.coeff({{"t", n}}) == catalan[n]);
    TruncSeries t = TruncSeries::var(c.ring, "t");
    CHECK((t * c.T.pow(2) - c.T + Rational(1)).is_zero());
    // Dyck paths only close at even length, with Catalan counts
    for (int n = 0; n <= 12; ++n) CHECK(c.D.coeff({{"t", n}}) == (n % 2 ? 0 : catalan[n / 2]));
    CHECK(c.D.coeff({{"t", 2}, {"x", 1}}) == 0);
    // algebraic equation of planar maps
    TruncSeries r = t.pow(2) * c.M1.pow(2) * Rational(27) - (t * Rational(18) - Rational(1)) * c.M1 +
                    (t * Rational(16) - Rational(1));
    CHECK(r.is_zero());
    for (int n = 0; n <= 10; ++n) CHECK(c.M1.coeff({{"t", n}}) == Rational(planar_map_formula(n)));
    auto by_genus = [](int n) { return count_rooted_maps(n, MapFilter{.genus = 0}); };
    for (int n = 1; n <= 4; ++n) CHECK(c.M1.coeff({{"t", n}}) == Rational(by_genus(n)));
    CHECK(planar_map_formula(3) == 54);
    CHECK(c.M.coeff({{"t", 1}, {"x", 2}}) == 1);
    CHECK(c.M.coeff({{"t", 1}, {"x", 1}}) == 1);
}

TEST_CASE("Omega and Gamma operators") {
    auto R = make_ring({"t"}, [] {
        std::vector<std::string> v{"x"};
        for (auto& p : p_names(3)) v.push_back(p);
        return v;
    }(), 5);
    TruncSeries x = TruncSeries::var(R, "x"), one(R, 1);
    TruncSeries p1 = TruncSeries::var(R, "p1"), p2 = TruncSeries::var(R, "p2"), p3 = TruncSeries::var(R, "p3");
    CHECK(omega_op(one).is_zero());
    CHECK(omega_op(x) == p1);
    CHECK(omega_op(x.pow(2)) == x * p1 + p2);
    CHECK(omega_op(x.pow(4)) == x.pow(3) * p1 + x.pow(2) * p2 + x * p3);
    CHECK(gamma_op(p1) == x);
    CHECK(gamma_op(p2) == x.pow(2) * Rational(2));
    CHECK(gamma_op(p3.pow(2)) == p3 * x.pow(3) * Rational(6));
    CHECK(gamma_op(x).is_zero());

    std::mt19937 rng(20240917);
    for (int i = 0; i < 100; ++i) {
        TruncSeries a = random_series(R, rng), b = random_series(R, rng);
        CHECK(gamma_op(a * b) == gamma_op(a) * b + a * gamma_op(b));
        CHECK(omega_op(a + b) == omega_op(a) + omega_op(b));
    }
}

TEST_CASE("change of variables round trips") {
    for (int m : {2, 3}) {
        auto cv = change_of_variables(m, 3, 6);
        TruncSeries t = TruncSeries::var(cv.tx, "t"), x = TruncSeries::var(cv.tx, "x");
        CHECK(cv.to_tx(cv.t_of_z()) == t);
        CHECK(cv.to_tx(cv.x_of_zu()) == x);
        // z = t (1 + gamma)^{m-1}
        TruncSeries g = cv.to_tx(cv.gamma());
        CHECK(cv.z_of_t == t * (g + Rational(1)).pow(m - 1));
        TruncSeries uz = cv.u_of_tx * cv.z_of_t;
        CHECK(cv.u_of_tx == x * (uz + Rational(1)).pow(m));
    }
}

TEST_CASE("planar constellations: iteration against the closed form") {
    for (auto [m, K, order] : {std::tuple{2, 3, 6}, {2, 1, 8}, {3, 2, 5}, {4, 2, 4}}) {
        CAPTURE(m);
        CAPTURE(K);
        auto cv = change_of_variables(m, K, order);
        TruncSeries F = constellation_planar(cv);
        TruncSeries C = constellation_planar_closed(cv);
        CHECK(first_difference(F, C) == "");
        CHECK(F.set_zero({"t"}) == TruncSeries(cv.tx, 1));
        for (const auto& [mono, c] : F.terms()) CHECK(c > 0);
    }
}

TEST_CASE("planar constellations against labelled enumeration") {
    for (auto [m, order] : {std::pair{2, 4}, {3, 3}}) {
        CAPTURE(m);
        auto cv = change_of_variables(m, 1, order);
        TruncSeries F = constellation_planar(cv);
        CHECK(first_difference(F, planar_oracle(m, order, cv.tx)) == "");
    }
}

TEST_CASE("bipartite genus recursion") {
    auto gs = bipartite_genus(1, 2, 6);
    REQUIRE(gs.size() == 2);
    TruncSeries F0 = constellation_planar(2, 2, 6);
    CHECK(gs[0] == F0.to_ring(gs[0].ring()));
    // genus one maps need at least two edges
    CHECK(gs[1].coeff({{"t", 1}, {"x", 1}}) == 0);
    for (const auto& [mono, c] : gs[1].terms()) CHECK(c > 0);
    // one-face genus-one bipartite maps with two edges: the root face has degree 4
    CHECK(gs[1].coeff({{"t", 2}, {"x", 2}}) == Rational(count_rooted_bipartite(2, 1)));

    SeriesCheck g0 = gamma_f0_check(8);
    CHECK_MESSAGE(g0.ok, g0.detail);
    SeriesCheck l1 = l1_check(5);
    CHECK_MESSAGE(l1.ok, l1.detail);
}

TEST_CASE("F1 closed form: printed version disagrees, corrected version matches") {
    SeriesCheck pr = f1_check(2, 6, FormVariant::Printed);
    CHECK_FALSE(pr.ok);
    CHECK(pr.detail.find("left") != std::string::npos);
    for (auto [K, order] : {std::pair{2, 6}, {4, 8}, {1, 7}}) {
        SeriesCheck c = f1_check(K, order, FormVariant::Corrected);
        CHECK_MESSAGE(c.ok, c.detail);
    }
}

TEST_CASE("Gamma on the Greek variables") {
    auto pr = gamma_on_greek_check(6, 3, 3, FormVariant::Printed);
    for (const char* name : {"Gamma z", "Gamma u", "Gamma s", "Gamma uz", "Gamma gamma", "Gamma eta_0", "Gamma eta_1",
                             "Gamma eta_2", "Gamma eta_3"}) {
        const auto& c = find_check(pr, name);
        CHECK_MESSAGE(c.ok, name << ": " << c.detail);
    }
    for (const char* name : {"Gamma zeta", "Gamma zeta_1", "Gamma zeta_2", "Gamma zeta_3"})
        CHECK_FALSE(find_check(pr, name).ok);
    auto co = gamma_on_greek_check(6, 3, 3, FormVariant::Corrected);
    for (const auto& c : co) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
}

TEST_CASE("Greek variables are independent") {
    CHECK(greek_jacobian_rank(1) == 4);
    CHECK(greek_jacobian_rank(2) == 6);
    CHECK(greek_coeff(Greek::Gamma, 0, 3) == 10);
    CHECK(greek_coeff(Greek::Eta, 0, 1) == 0);
    CHECK(greek_coeff(Greek::Zeta, 0, 2) == Rational(1, 3) * 3);
}

TEST_CASE("triangulation parametrizations") {
    Triangulations tr = triangulation_parametrizations(12);
    for (const auto* f : {&tr.S0, &tr.T0})
        for (const auto& [mono, c] : f->terms()) CHECK(mono[0] % 3 == 0);
    CHECK(tr.S0.coeff({{"t", 3}}) == 1);
    CHECK(tr.T0.coeff({{"t", 3}}) == 1);
    CHECK(tr.T0.coeff({{"t", 6}}) == 4);
    // [t^{3k}] counts triangulations with 3k edges and 2k faces
    for (int k = 1; k <= 2; ++k) {
        MapFilter simple{.genus = 0, .faces = IntegerPartition(std::vector<int>(2 * k, 3)), .simple = true};
        MapFilter loopless{.genus = 0, .faces = IntegerPartition(std::vector<int>(2 * k, 3)), .loopless = true};
        CHECK(tr.S0.coeff({{"t", 3 * k}}) == Rational(count_rooted_maps(3 * k, simple)));
        CHECK(tr.T0.coeff({{"t", 3 * k}}) == Rational(count_rooted_maps(3 * k, loopless)));
    }
    CHECK_THROWS_AS(triangulation_parametrizations(31), InputError);
}

TEST_CASE("coefficient rows") {
    auto R = make_ring({"t"}, {"x"}, 3);
    TruncSeries f = TruncSeries::var(R, "t") * Rational(2, 3) + Rational(1);
    auto rows = coefficient_rows(f);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"t", "x", "numerator", "denominator"});
    CHECK(rows[2] == std::vector<std::string>{"1", "0", "2", "3"});
}
