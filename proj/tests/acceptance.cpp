// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "mapforge/charkit.hpp"
#include "mapforge/mapkit.hpp"
#include "mapforge/seriesforge.hpp"
#include "mapforge/tamari.hpp"
#include "mapforge/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace mapforge;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from(const VerifyReport& r) { return {r.ok, r.ok ? r.summary : r.failure}; }

void absorb(Outcome& o, const VerifyReport& r) {
    if (o.ok && !r.ok) o = {false, r.failure};
}

void expect(Outcome& o, bool cond, const std::string& what) {
    if (o.ok && !cond) o = {false, what};
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        o.detail += " [over time budget " + std::to_string(static_cast<int>(budget_s)) + " s]";
        o.ok = false;
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2d %s: %s (%.2f s) %s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "planar map counts 2, 9, 54, 378", 60, [] {
        Outcome o;
        const int want[] = {2, 9, 54, 378};
        for (int n = 1; n <= 4; ++n) {
            BigInt bf = count_rooted_maps(n, MapFilter{.genus = 0, .faces = {}, .vertices = {}});
            expect(o, bf == want[n - 1] && planar_map_formula(n) == bf,
                   "n = " + std::to_string(n) + ": " + to_string(bf));
        }
        if (o.ok) o.detail = "enumeration = closed formula for n <= 4";
        return o;
    });

    criterion(2, "Catalan, Dyck and planar map series", 1, [] {
        Outcome o = from(verify_catalan(12));
        CatalanSuite c = catalan_suite(12);
        const int head[] = {1, 1, 2, 5, 14, 42};
        for (int n = 0; n < 6; ++n) expect(o, c.T.coeff({{"t", n}}) == head[n], "T expansion at t^" + std::to_string(n));
        return o;
    });

    criterion(3, "character values and orthogonality", 30, [] {
        Outcome o;
        BigInt v = mn_character(IntegerPartition({5, 4, 3}), IntegerPartition({3, 3, 2, 2, 1, 1}));
        expect(o, v == -2, "chi^{5,4,3}_{3,3,2,2,1,1} = " + to_string(v));
        for (int n = 1; n <= 6; ++n) absorb(o, verify_characters(n));
        if (o.ok) o.detail = "chi = -2; orthogonality for n <= 6";
        return o;
    });

    criterion(4, "Frobenius counting against exhaustive search", 300, [] {
        Outcome o;
        int cases = 0;
        for (int n = 1; n <= 5; ++n) {
            VerifyReport r = verify_frobenius(n, 3);
            cases += r.cases;
            absorb(o, r);
        }
        if (o.ok) o.detail = std::to_string(cases) + " type tuples, n <= 5, up to 3 factors";
        return o;
    });

    criterion(5, "Jucys-Murphy product and Hurwitz numbers", 300, [] {
        Outcome o;
        absorb(o, verify_jm(6));
        absorb(o, verify_hurwitz(5, 4));
        if (o.ok) o.detail = "Pi_n for n <= 6; classical and monotone for n <= 5, r <= 4";
        return o;
    });

    criterion(6, "Littlewood factorization", 120, [] {
        Outcome o;
        for (int n = 1; 2 * n <= 8; ++n) absorb(o, verify_littlewood(2, n));
        for (int n = 1; 3 * n <= 6; ++n) absorb(o, verify_littlewood(3, n));
        if (o.ok) o.detail = "m = 2, mn <= 8 and m = 3, mn <= 6";
        return o;
    });

    criterion(7, "quadrangulation relations and coefficients", 600, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n)
            for (int g = 0; g <= 1; ++g) absorb(o, verify_quad(2, g, n, {2}));
        for (int n = 1; n <= 2; ++n)
            for (int g = 0; g <= 1; ++g) absorb(o, verify_quad(3, g, n, {}));
        absorb(o, verify_quad_coeffs(6, 6));
        if (o.ok) o.detail = "m = 2 (D = {2}, n <= 3), m = 3 (n <= 2), g <= 1; d > 0 and m | d";
        return o;
    });

    criterion(8, "Tamari and synchronized interval counts", 120, [] {
        Outcome o = from(verify_tamari(5, 4));
        const int usual[] = {1, 3, 13, 68};
        const int sync[] = {1, 2, 6, 22, 91};
        for (int n = 1; n <= 4; ++n)
            expect(o, tamari_interval_count(n) == usual[n - 1], "Tamari intervals at n = " + std::to_string(n));
        for (int n = 1; n <= 5; ++n)
            expect(o, static_cast<int>(sync_intervals(n).size()) == sync[n - 1],
                   "synchronized intervals at n = " + std::to_string(n));
        return o;
    });

    criterion(9, "bijection round trips", 600, [] { return from(verify_bijection(5)); });

    criterion(10, "series identities for bipartite maps (printed forms)", 600, [] {
        Outcome o = from(verify_series(FormVariant::Printed));
        if (!o.ok) {
            VerifyReport corrected = verify_series(FormVariant::Corrected);
            o.detail += corrected.ok ? "; corrected forms: all " + std::to_string(corrected.cases) + " pass"
                                     : "; corrected forms also fail: " + corrected.failure;
        }
        return o;
    });

    criterion(11, "triangulation parametrizations", 600, [] { return from(verify_triangulations()); });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
