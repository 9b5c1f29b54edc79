#pragma once

#include "mapforge/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace mapforge {

struct CatalanSuite {
    RingPtr ring;   // t graded, x free
    TruncSeries T;  // plane trees, tT^2 - T + 1 = 0
    TruncSeries P;  // positive paths, x marks final height
    TruncSeries D;  // Dyck paths, P at x = 0
    TruncSeries M;  // planar maps, x marks outer degree
    TruncSeries M1; // M at x = 1
};
CatalanSuite catalan_suite(int order);
// 2 * 3^n * C(2n, n) / ((n+1)(n+2))
BigInt planar_map_formula(int n);

// Omega x^k = sum_{i=1..k} x^{k-i} p_i, with p_i missing from the ring treated as zero.
TruncSeries omega_op(const TruncSeries& f);
// Gamma = sum_k k x^k d/dp_k over the p variables of the ring.
TruncSeries gamma_op(const TruncSeries& f);

// (t, x) <-> (z, u) for m-constellations with faces p1..pP:
// t = z (1 + gamma)^{1-m}, x = u (1 + uz)^{-m}.
struct ChangeOfVariables {
    int m = 2;
    int P = 0;
    int order = 0;
    RingPtr tx;  // t, x, p1..pP
    RingPtr zu;  // z, u, p1..pP
    TruncSeries z_of_t;
    TruncSeries u_of_tx;

    // Series in zu rewritten in t, x.
    TruncSeries to_tx(const TruncSeries& f) const;
    // sum_k C(mk-1, k) p_k z^k in zu.
    TruncSeries gamma() const;
    // t(z) and x(z,u) in zu.
    TruncSeries t_of_z() const;
    TruncSeries x_of_zu() const;
};
ChangeOfVariables change_of_variables(int m, int P, int order);

// F_{m,0} = 1 + xt (F_{m,0} + Omega)^m (1), iterated in the tx ring of cv.
TruncSeries constellation_planar(const ChangeOfVariables& cv);
TruncSeries constellation_planar(int m, int K, int order);
// 1 + A with A the closed form in (z, u), converted to (t, x).
TruncSeries constellation_planar_closed(const ChangeOfVariables& cv);

// Sets p_k = 0 for k > K and moves f into ring.
TruncSeries restrict_p(const TruncSeries& f, int K, const RingPtr& ring);

// F_0..F_gmax of bipartite maps from the genus recursion, with p kept up to P.
std::vector<TruncSeries> bipartite_genus_series(int gmax, const ChangeOfVariables& cv);
// Same, computed with p up to K + order and restricted to p1..pK.
std::vector<TruncSeries> bipartite_genus(int gmax, int K, int order);

enum class Greek { Gamma, Eta, Zeta, EtaI, ZetaI };
// Coefficient of p_k z^k in the given Greek variable (index i for EtaI, ZetaI).
Rational greek_coeff(Greek kind, int i, int k);

struct GreekFrame {
    int order = 0;
    int K = 0;
    int depth = 0;
    RingPtr zu;
    TruncSeries gamma, eta, zeta;
    std::vector<TruncSeries> eta_i;   // eta_i[0] = eta
    std::vector<TruncSeries> zeta_i;  // zeta_i[0] unused
    TruncSeries uz, s, s_inv;

    // Laurent polynomial in s, keyed by exponent.
    TruncSeries laurent(const std::map<int, Rational>& poly) const;
};
GreekFrame greek_frame(const RingPtr& zu, int K, int depth);
GreekFrame greek_frame(int order, int K, int depth = 3);

// Printed: the closed forms exactly as published. Corrected: with the sign
// fixes that make them agree with the iterated series.
enum class FormVariant { Printed, Corrected };

struct SeriesCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Closed form of F_1 in Greek variables, in the zu ring of the frame.
TruncSeries f1_closed_form(const GreekFrame& gf, FormVariant v = FormVariant::Printed);
// Gamma F_0 against u^2 z^2 / (1 - uz)^4 with all p up to order.
SeriesCheck gamma_f0_check(int order);
SeriesCheck f1_check(int K, int order, FormVariant v = FormVariant::Printed);
// n! [t^n p_mu] L_1 against labelled genus-one bipartite rotation systems, n <= n_max.
SeriesCheck l1_check(int n_max);
// Each Gamma action identity on z, u, s, uz and the Greek variables.
// The corrected zeta and zeta_i forms are (Gamma z / z + Theta) D applied to them.
std::vector<SeriesCheck> gamma_on_greek_check(int order, int K, int depth = 3,
                                              FormVariant v = FormVariant::Printed);
// Rank of the Jacobian of (eta, eta_1..eta_d, zeta, zeta_1..zeta_d) in p_2 z^2 .. p_{2d+3} z^{2d+3}.
int greek_jacobian_rank(int d);

struct Triangulations {
    RingPtr ring;  // t
    TruncSeries S0, T0;
};
// S0 = s(1-2s) with t^3 = s(1-s)^3; T0 = s(1-4s)/(1-2s)^2 with t^3 = s(1-2s)^2.
Triangulations triangulation_parametrizations(int order);

// Named series: catalan (T), planar (M at x = 1), s0, t0, f0 (m-constellations),
// f1, fg (bipartite genus g), l1 (closed form in t, x, p1..pK).
TruncSeries series_target(const std::string& target, int order, int K, int m = 2, int genus = 1);

// Coefficient table rows: exponent vector, numerator, denominator.
std::vector<std::vector<std::string>> coefficient_rows(const TruncSeries& f);

}  // namespace mapforge
