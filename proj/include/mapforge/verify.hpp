#pragma once

#include "mapforge/charkit.hpp"
#include "mapforge/seriesforge.hpp"

#include <string>
#include <vector>

namespace mapforge {

// Outcome of a verification loop. failure holds the first counterexample.
struct VerifyReport {
    bool ok = true;
    std::string summary;
    std::string failure;
    int cases = 0;

    void fail(const std::string& what) {
        if (ok) failure = what;
        ok = false;
    }
    // Counts a case and records it as failed when cond is false.
    bool expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond) fail(what);
        return cond;
    }
    void merge(const VerifyReport& o);
};

// Rooted genus-zero map counts by brute force against the closed formula, n <= 5.
VerifyReport verify_planar_counts(int n_max);
// Tree, Dyck and planar map series: expansions, residues, closed formula.
VerifyReport verify_catalan(int order);
// Row and column orthogonality of the character table of S_n, n <= 9.
VerifyReport verify_characters(int n);
// count_factorizations_char against exhaustive search for 1..m factors.
VerifyReport verify_frobenius(int n, int m);
// Jucys-Murphy product against its class expansion, n <= 8.
VerifyReport verify_jm(int n);
// Classical and monotone Hurwitz numbers for all lambda of 1..n and 0..r factors.
VerifyReport verify_hurwitz(int n, int r);
// Littlewood factorization for all theta of mn and lambda of n.
VerifyReport verify_littlewood(int m, int n);
VerifyReport verify_quad(int m, int g, int n, const std::vector<int>& D, Marking marking = Marking::Unordered);
// d > 0 and m | d for all 2 <= m <= m_max and k with sum at most k_sum.
VerifyReport verify_quad_coeffs(int m_max, int k_sum);
// Interval counts for sizes 1..n, type classes and duality for |v| <= v_max.
VerifyReport verify_tamari(int n, int v_max);
// Round trips for maps with up to e_max edges, trees up to e_max - 1, intervals up to e_max.
VerifyReport verify_bijection(int e_max);
// Gamma F0, F1, L1 and the Gamma actions on the Greek variables.
VerifyReport verify_series(FormVariant v);
// [t^3] and [t^6] of the triangulation series against rooted map enumeration.
VerifyReport verify_triangulations();

}  // namespace mapforge
