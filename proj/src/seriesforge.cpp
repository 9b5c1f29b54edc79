#include "mapforge/seriesforge.hpp"

#include "mapforge/mapkit.hpp"

#include <sstream>

namespace mapforge {

namespace {

// p index k -> ring slot, -1 when absent.
std::vector<int> p_slots(const SeriesRing& R, int kmax) {
    std::vector<int> out(kmax + 1, -1);
    for (int k = 1; k <= kmax; ++k)
        if (R.has("p" + std::to_string(k))) out[k] = R.index("p" + std::to_string(k));
    return out;
}

int max_p(const SeriesRing& R) {
    int k = 0;
    while (R.has("p" + std::to_string(k + 1))) ++k;
    return k;
}

// Divides every term by x, dropping terms without x.
TruncSeries shift_down(const TruncSeries& f, int xi) {
    TruncSeries out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m[xi] == 0) continue;
        TruncSeries::Mono mm = m;
        --mm[xi];
        out.add_term(mm, c);
    }
    return out;
}

// x^k -> 1 + x + ... + x^k
TruncSeries divided_difference(const TruncSeries& f, int xi) {
    TruncSeries out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        TruncSeries::Mono mm = m;
        for (int j = 0; j <= m[xi]; ++j) {
            mm[xi] = j;
            out.add_term(mm, c);
        }
    }
    return out;
}

std::vector<TruncSeries> identity_images(const RingPtr& from, const RingPtr& to) {
    std::vector<TruncSeries> out;
    for (const auto& n : from->names)
        out.push_back(to->has(n) ? TruncSeries::var(to, n) : TruncSeries(to));
    return out;
}

SeriesCheck compare(std::string name, const TruncSeries& lhs, const TruncSeries& rhs) {
    SeriesCheck c;
    c.name = std::move(name);
    c.detail = first_difference(lhs, rhs);
    c.ok = c.detail.empty();
    if (c.ok) c.detail = std::to_string(lhs.size()) + " coefficients agree";
    return c;
}

Rational binom_q(long n, long k) { return Rational(binomial(n, k)); }

}  // namespace

BigInt planar_map_formula(int n) {
    return 2 * ipow(BigInt(3), n) * binomial(2 * n, n) / ((n + 1) * (n + 2));
}

CatalanSuite catalan_suite(int order) {
    if (order < 1) throw InputError("catalan_suite needs order >= 1");
    CatalanSuite cs;
    cs.ring = make_ring({"t"}, {"x"}, order);
    const RingPtr& R = cs.ring;
    const int xi = R->index("x");
    TruncSeries t = TruncSeries::var(R, "t"), x = TruncSeries::var(R, "x"), one(R, 1);
    const int iters = order + 3;

    cs.T = fixed_point(one, [&](const TruncSeries& T) { return one + t * T * T; }, iters);
    cs.P = fixed_point(one, [&](const TruncSeries& P) {
        return one + t * x * P + t * shift_down(P - P.set_zero({"x"}), xi);
    }, iters);
    cs.D = cs.P.set_zero({"x"});
    cs.M = fixed_point(one, [&](const TruncSeries& M) {
        return one + t * x * x * M * M + t * x * divided_difference(M, xi);
    }, iters);
    cs.M1 = cs.M.compose(R, {t, one});
    return cs;
}

TruncSeries omega_op(const TruncSeries& f) {
    const SeriesRing& R = *f.ring();
    const int xi = R.index("x");
    int kmax = 0;
    for (const auto& [m, c] : f.terms()) kmax = std::max(kmax, m[xi]);
    auto slot = p_slots(R, kmax);
    TruncSeries out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        for (int i = 1; i <= m[xi]; ++i) {
            if (slot[i] < 0) continue;
            TruncSeries::Mono mm = m;
            mm[xi] -= i;
            ++mm[slot[i]];
            out.add_term(mm, c);
        }
    }
    return out;
}

TruncSeries gamma_op(const TruncSeries& f) {
    const SeriesRing& R = *f.ring();
    const int xi = R.index("x");
    const int P = max_p(R);
    auto slot = p_slots(R, P);
    TruncSeries out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        for (int k = 1; k <= P; ++k) {
            int e = m[slot[k]];
            if (e == 0) continue;
            TruncSeries::Mono mm = m;
            --mm[slot[k]];
            mm[xi] += k;
            out.add_term(mm, c * (e * k));
        }
    }
    return out;
}

TruncSeries ChangeOfVariables::gamma() const {
    TruncSeries g(zu);
    TruncSeries z = TruncSeries::var(zu, "z");
    for (int k = 1; k <= P; ++k)
        g += TruncSeries::var(zu, "p" + std::to_string(k)) * z.pow(k) * binom_q(long(m) * k - 1, k);
    return g;
}

TruncSeries ChangeOfVariables::t_of_z() const {
    return TruncSeries::var(zu, "z") * (gamma() + Rational(1)).pow(1 - m);
}

TruncSeries ChangeOfVariables::x_of_zu() const {
    TruncSeries u = TruncSeries::var(zu, "u"), z = TruncSeries::var(zu, "z");
    return u * (u * z + Rational(1)).pow(-m);
}

TruncSeries ChangeOfVariables::to_tx(const TruncSeries& f) const {
    std::vector<TruncSeries> images = identity_images(f.ring(), tx);
    images[f.ring()->index("z")] = z_of_t;
    images[f.ring()->index("u")] = u_of_tx;
    return f.compose(tx, images);
}

ChangeOfVariables change_of_variables(int m, int P, int order) {
    if (m < 2) throw InputError("change of variables needs m >= 2");
    if (P < 0 || order < 0) throw InputError("change of variables needs P, order >= 0");
    ChangeOfVariables cv;
    cv.m = m;
    cv.P = P;
    cv.order = order;
    cv.tx = make_ring({"t"}, [&] {
        std::vector<std::string> f{"x"};
        for (auto& p : p_names(P)) f.push_back(p);
        return f;
    }(), order);
    cv.zu = make_ring({"z"}, [&] {
        std::vector<std::string> f{"u"};
        for (auto& p : p_names(P)) f.push_back(p);
        return f;
    }(), order);
    TruncSeries t = TruncSeries::var(cv.tx, "t"), x = TruncSeries::var(cv.tx, "x");
    TruncSeries g = cv.gamma();
    std::vector<TruncSeries> images = identity_images(cv.zu, cv.tx);
    const int zi = cv.zu->index("z");
    cv.z_of_t = fixed_point(t, [&](const TruncSeries& z) {
        images[zi] = z;
        return t * (g.compose(cv.tx, images) + Rational(1)).pow(m - 1);
    }, order + 3);
    cv.u_of_tx = fixed_point(x, [&](const TruncSeries& u) {
        return x * (u * cv.z_of_t + Rational(1)).pow(m);
    }, order + 3);
    return cv;
}

TruncSeries constellation_planar(const ChangeOfVariables& cv) {
    const RingPtr& R = cv.tx;
    TruncSeries one(R, 1), xt = TruncSeries::var(R, "x") * TruncSeries::var(R, "t");
    return fixed_point(one, [&](const TruncSeries& F) {
        TruncSeries G = one;
        for (int i = 0; i < cv.m; ++i) G = F * G + omega_op(G);
        return one + xt * G;
    }, cv.order + 3);
}

TruncSeries constellation_planar(int m, int K, int order) {
    return constellation_planar(change_of_variables(m, K, order));
}

TruncSeries constellation_planar_closed(const ChangeOfVariables& cv) {
    const RingPtr& R = cv.zu;
    TruncSeries z = TruncSeries::var(R, "z"), uz = TruncSeries::var(R, "u") * z;
    TruncSeries inner(R, 1);
    for (int k = 1; k <= cv.P; ++k) {
        TruncSeries sum(R);
        for (int l = 1; l <= (cv.m - 1) * k - 1; ++l) sum += uz.pow(l) * binom_q(long(cv.m) * k - 1, k + l);
        inner -= TruncSeries::var(R, "p" + std::to_string(k)) * z.pow(k) * sum;
    }
    TruncSeries A = (uz + Rational(1)) * inner - Rational(1);
    return cv.to_tx(A + Rational(1));
}

TruncSeries restrict_p(const TruncSeries& f, int K, const RingPtr& ring) {
    std::vector<std::string> drop;
    for (int k = K + 1; k <= max_p(*f.ring()); ++k) drop.push_back("p" + std::to_string(k));
    return f.set_zero(drop).to_ring(ring);
}

std::vector<TruncSeries> bipartite_genus_series(int gmax, const ChangeOfVariables& cv) {
    if (cv.m != 2) throw InputError("bipartite recursion needs m = 2");
    if (gmax < 0) throw InputError("genus must be >= 0");
    const RingPtr& R = cv.tx;
    TruncSeries one(R, 1), xt = TruncSeries::var(R, "x") * TruncSeries::var(R, "t");
    const int iters = cv.order + 3;
    std::vector<TruncSeries> F;
    F.push_back(fixed_point(one, [&](const TruncSeries& f) { return one + xt * (f * f + omega_op(f)); }, iters));
    for (int g = 1; g <= gmax; ++g) {
        TruncSeries known = gamma_op(F[g - 1]);
        for (int h = 1; h < g; ++h) known += F[h] * F[g - h];
        TruncSeries twoF0 = F[0] * Rational(2);
        F.push_back(fixed_point(TruncSeries(R), [&](const TruncSeries& f) {
            return xt * (omega_op(f) + known + twoF0 * f);
        }, iters));
    }
    return F;
}

std::vector<TruncSeries> bipartite_genus(int gmax, int K, int order) {
    auto cvP = change_of_variables(2, K + order, order);
    auto F = bipartite_genus_series(gmax, cvP);
    RingPtr target = make_ring({"t"}, [&] {
        std::vector<std::string> f{"x"};
        for (auto& p : p_names(K)) f.push_back(p);
        return f;
    }(), order);
    for (auto& f : F) f = restrict_p(f, K, target);
    return F;
}

Rational greek_coeff(Greek kind, int i, int k) {
    if (k < 1) throw InputError("greek_coeff needs k >= 1");
    Rational c = binom_q(2L * k - 1, k);
    switch (kind) {
        case Greek::Gamma: return c;
        case Greek::Eta: return c * (k - 1);
        case Greek::Zeta: return c * Rational(k - 1, 2 * k - 1);
        case Greek::EtaI: return c * (k - 1) * Rational(ipow(BigInt(k), i));
        case Greek::ZetaI: {
            Rational r = Rational(ipow(BigInt(2), i + 1)) * ((i + 1) % 2 ? -1 : 1);
            for (int j = 0; j <= i; ++j) r *= Rational(k - j, 2 * k - 2 * j - 1);
            return c * r;
        }
    }
    return 0;
}

TruncSeries GreekFrame::laurent(const std::map<int, Rational>& poly) const {
    TruncSeries out(zu);
    for (const auto& [e, c] : poly) out += (e >= 0 ? s.pow(e) : s_inv.pow(-e)) * c;
    return out;
}

GreekFrame greek_frame(const RingPtr& zu, int K, int depth) {
    GreekFrame gf;
    gf.order = zu->order;
    gf.K = K;
    gf.depth = depth;
    gf.zu = zu;
    TruncSeries z = TruncSeries::var(zu, "z");
    auto make = [&](Greek kind, int i) {
        TruncSeries out(zu);
        for (int k = 1; k <= K; ++k)
            out += TruncSeries::var(zu, "p" + std::to_string(k)) * z.pow(k) * greek_coeff(kind, i, k);
        return out;
    };
    gf.gamma = make(Greek::Gamma, 0);
    gf.eta = make(Greek::Eta, 0);
    gf.zeta = make(Greek::Zeta, 0);
    gf.eta_i.push_back(gf.eta);
    for (int i = 1; i <= depth + 1; ++i) gf.eta_i.push_back(make(Greek::EtaI, i));
    gf.zeta_i.push_back(TruncSeries(zu));
    for (int i = 1; i <= depth; ++i) gf.zeta_i.push_back(make(Greek::ZetaI, i));
    gf.uz = TruncSeries::var(zu, "u") * z;
    TruncSeries one(zu, 1);
    gf.s = (one - gf.uz) * (one + gf.uz).inverse();
    gf.s_inv = (one + gf.uz) * (one - gf.uz).inverse();
    return gf;
}

GreekFrame greek_frame(int order, int K, int depth) {
    return greek_frame(change_of_variables(2, K, order).zu, K, depth);
}

TruncSeries f1_closed_form(const GreekFrame& gf, FormVariant v) {
    const RingPtr& R = gf.zu;
    TruncSeries one(R, 1);
    TruncSeries a = (one - gf.uz).inverse();
    TruncSeries b = (one + gf.uz).inverse();
    TruncSeries ie = (one - gf.eta).inverse();
    TruncSeries iz = (one + gf.zeta).inverse();
    const TruncSeries& eta = gf.eta;
    const TruncSeries& eta1 = gf.eta_i.at(1);
    const TruncSeries& zeta = gf.zeta;
    TruncSeries f(R);
    f += (eta - eta1 * Rational(2) - Rational(1)) * Rational(1, 16) * a.pow(2) * ie.pow(2);
    const int sign = v == FormVariant::Printed ? 1 : -1;
    f += ((one + zeta) * eta1 * Rational(4) + eta * eta * Rational(3) - zeta * (one - eta) * Rational(6) +
          Rational(3 * sign)) *
         Rational(1, 96) * a * iz * ie.pow(2);
    f -= a.pow(5) * ie * Rational(sign, 2);
    f -= a.pow(4) * ie * Rational(5, 4);
    f -= b * iz * Rational(1, 32);
    f -= (eta * Rational(21) - eta1 * Rational(2) - Rational(21)) * Rational(1, 24) * a.pow(3) * ie.pow(2);
    return f;
}

SeriesCheck gamma_f0_check(int order) {
    auto cv = change_of_variables(2, order, order);
    TruncSeries lhs = gamma_op(bipartite_genus_series(0, cv)[0]);
    TruncSeries uz = TruncSeries::var(cv.zu, "u") * TruncSeries::var(cv.zu, "z");
    TruncSeries rhs = cv.to_tx(uz * uz * (Rational(1) - uz).pow(-4));
    return compare("Gamma F0 = u^2 z^2 / (1 - uz)^4", lhs, rhs);
}

SeriesCheck f1_check(int K, int order, FormVariant v) {
    auto cv = change_of_variables(2, K, order);
    TruncSeries lhs = bipartite_genus(1, K, order)[1];
    TruncSeries rhs = cv.to_tx(f1_closed_form(greek_frame(cv.zu, K, 1), v));
    return compare(std::string("F1 iterated = F1 closed form") + (v == FormVariant::Printed ? "" : " (corrected)"),
                   lhs, rhs);
}

SeriesCheck l1_check(int n_max) {
    auto cv = change_of_variables(2, n_max, n_max);
    GreekFrame gf = greek_frame(cv.zu, n_max, 0);
    TruncSeries one(cv.zu, 1);
    TruncSeries L1 = -(one - gf.eta).log() * Rational(1, 24) - (one + gf.zeta).log() * Rational(1, 8);
    TruncSeries series = cv.to_tx(L1);
    // Expected series from labelled rotation systems.
    TruncSeries expected(cv.tx);
    for (int n = 1; n <= n_max; ++n) {
        std::map<IntegerPartition, BigInt> by_type;
        for (const auto& [k, v] : constellation_histogram(2, n))
            if (k.genus == 1) by_type[k.phi_type] += v;
        for (const auto& [mu, cnt] : by_type) {
            TruncSeries::Mono m(cv.tx->size(), 0);
            m[cv.tx->index("t")] = n;
            for (int part : mu.parts()) ++m[cv.tx->index("p" + std::to_string(part))];
            expected.add_term(m, Rational(cnt) / Rational(factorial(n)));
        }
    }
    return compare("L1 closed form = genus-one rotation systems", series, expected);
}

std::vector<SeriesCheck> gamma_on_greek_check(int order, int K, int depth, FormVariant v) {
    auto cvP = change_of_variables(2, K + order, order);
    auto cvK = change_of_variables(2, K, order);
    GreekFrame P = greek_frame(cvP.zu, K + order, depth);
    GreekFrame G = greek_frame(cvK.zu, K, depth);
    auto lhs = [&](const TruncSeries& f) { return restrict_p(gamma_op(cvP.to_tx(f)), K, cvK.tx); };
    auto rhs = [&](const TruncSeries& f) { return cvK.to_tx(f); };
    const RingPtr& R = G.zu;
    TruncSeries one(R, 1);
    TruncSeries ie = (one - G.eta).inverse();
    TruncSeries diff = G.s_inv - G.s;                  // s^{-1} - s
    TruncSeries common = diff * G.s_inv.pow(2) * ie * Rational(1, 4);  // (s^{-1}-s) / (4(1-eta)s^2)
    TruncSeries z = TruncSeries::var(R, "z"), u = TruncSeries::var(R, "u");

    std::vector<SeriesCheck> out;
    out.push_back(compare("Gamma z", lhs(TruncSeries::var(P.zu, "z")), rhs(z * common)));
    out.push_back(compare("Gamma u", lhs(TruncSeries::var(P.zu, "u")), rhs(u * (G.s_inv - Rational(1)) * common)));
    out.push_back(compare("Gamma s", lhs(P.s), rhs(-diff * diff * G.s_inv.pow(2) * ie * Rational(1, 8))));
    out.push_back(compare("Gamma uz", lhs(P.uz),
                          rhs(G.s_inv.pow(2) * (G.s_inv - Rational(1)).pow(2) * ie * Rational(1, 4))));
    out.push_back(compare("Gamma gamma", lhs(P.gamma),
                          rhs(common * (G.eta + G.gamma) + G.laurent({{-3, 1}, {-1, -1}}) * Rational(1, 4))));
    const bool printed = v == FormVariant::Printed;
    const std::string tag = printed ? "" : " (corrected)";
    TruncSeries tail = printed ? G.laurent({{-3, 1}, {-1, -1}, {0, -2}, {1, 2}}) : G.laurent({{-3, 1}, {-1, -2}, {1, 1}});
    out.push_back(compare("Gamma zeta" + tag, lhs(P.zeta),
                          rhs(-diff * G.s_inv.pow(2) * Rational(1, 8) + common * (one + G.zeta) * Rational(1, 2) +
                              tail * Rational(1, 8))));
    // (s - s^{-1}) d/ds on Laurent polynomials
    auto theta = [](const std::map<int, Rational>& p) {
        std::map<int, Rational> r;
        for (const auto& [e, c] : p) {
            if (e == 0) continue;
            r[e] += c * e;
            r[e - 2] -= c * e;
        }
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        return r;
    };
    std::map<int, Rational> base{{-3, 1}, {-1, -3}, {0, 2}};
    for (int i = 0; i <= depth; ++i) {
        base = theta(base);
        TruncSeries r = common * G.eta_i[i + 1] + G.laurent(base) * Rational(1, 1 << (i + 3));
        out.push_back(compare("Gamma eta_" + std::to_string(i), lhs(P.eta_i[i]), rhs(r)));
    }
    TruncSeries s2m1 = G.s.pow(2) - Rational(1);
    for (int i = 1; i <= depth; ++i) {
        const int sign = (i % 2) ? -1 : 1;
        // Corrected: theta(zeta_i) = -(s^{-1}-s)(s^2-1)^i / 2, which changes D zeta_i.
        TruncSeries greek = G.zeta_i[i] * Rational(2 * i + 1) + (one + G.zeta) * Rational(printed ? 4 * sign : -2 * sign);
        TruncSeries poly = s2m1.pow(i) * Rational(2 * i + 1) + Rational(printed ? sign : -sign);
        for (int j = 1; j <= i - 1; ++j) {
            const int sj = (j % 2) ? 1 : -1;
            greek += G.zeta_i[i - j] * Rational(sj);
            poly += s2m1.pow(i - j) * Rational(sj);
        }
        TruncSeries r = common * greek * Rational(1, 2) + diff * poly * (printed ? Rational(1, 2) : Rational(-1, 4));
        out.push_back(compare("Gamma zeta_" + std::to_string(i) + tag, lhs(P.zeta_i[i]), rhs(r)));
    }
    return out;
}

int greek_jacobian_rank(int d) {
    std::vector<std::vector<Rational>> M;
    auto row = [&](Greek kind, int i) {
        std::vector<Rational> r;
        for (int k = 2; k <= 2 * d + 3; ++k) r.push_back(greek_coeff(kind, i, k));
        M.push_back(r);
    };
    row(Greek::Eta, 0);
    for (int i = 1; i <= d; ++i) row(Greek::EtaI, i);
    row(Greek::Zeta, 0);
    for (int i = 1; i <= d; ++i) row(Greek::ZetaI, i);
    int rank = 0;
    const int cols = static_cast<int>(M[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(M.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(M.size()); ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[rank]);
        for (int r = 0; r < static_cast<int>(M.size()); ++r) {
            if (r == rank || M[r][c] == 0) continue;
            Rational f = M[r][c] / M[rank][c];
            for (int j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

Triangulations triangulation_parametrizations(int order) {
    if (order < 0 || order > 30) throw InputError("triangulation order must be in [0, 30]");
    RingPtr W = make_ring(std::vector<std::string>{"w"}, std::vector<std::string>{}, order / 3);
    TruncSeries w = TruncSeries::var(W, "w"), one(W, 1);
    TruncSeries s1 = reversion(w * (one - w).pow(3), "w");
    TruncSeries s2 = reversion(w * (one - w * Rational(2)).pow(2), "w");
    TruncSeries S = s1 * (one - s1 * Rational(2));
    TruncSeries T = s2 * (one - s2 * Rational(4)) * (one - s2 * Rational(2)).pow(-2);
    Triangulations tr;
    tr.ring = make_ring(std::vector<std::string>{"t"}, std::vector<std::string>{}, order);
    TruncSeries t3 = TruncSeries::var(tr.ring, "t", 3);
    tr.S0 = S.compose(tr.ring, {t3});
    tr.T0 = T.compose(tr.ring, {t3});
    return tr;
}

TruncSeries series_target(const std::string& target, int order, int K, int m, int genus) {
    if (target == "catalan" || target == "planar") {
        CatalanSuite cs = catalan_suite(order);
        return (target == "catalan" ? cs.T : cs.M1).to_ring(make_ring({"t"}, std::vector<std::string>{}, order));
    }
    if (target == "s0" || target == "t0") {
        Triangulations tr = triangulation_parametrizations(order);
        return target == "s0" ? tr.S0 : tr.T0;
    }
    if (target == "f0") return constellation_planar(m, K, order);
    if (target == "f1") return bipartite_genus(1, K, order)[1];
    if (target == "fg") {
        if (genus < 0) throw InputError("negative genus");
        return bipartite_genus(genus, K, order)[genus];
    }
    if (target == "l1") {
        auto cv = change_of_variables(2, K, order);
        GreekFrame gf = greek_frame(cv.zu, K, 0);
        TruncSeries one(cv.zu, 1);
        return cv.to_tx(-(one - gf.eta).log() * Rational(1, 24) - (one + gf.zeta).log() * Rational(1, 8));
    }
    throw InputError("unknown series target '" + target + "'");
}

std::vector<std::vector<std::string>> coefficient_rows(const TruncSeries& f) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = f.ring()->names;
    header.push_back("numerator");
    header.push_back("denominator");
    rows.push_back(header);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::string> r;
        for (int e : m) r.push_back(std::to_string(e));
        r.push_back(to_string(BigInt(numerator(c))));
        r.push_back(to_string(BigInt(denominator(c))));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace mapforge
