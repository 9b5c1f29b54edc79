#include "mapforge/mapkit.hpp"

#include "mapforge/parallel.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace mapforge {

namespace {

struct UnionFind {
    std::array<int, 64> small{};
    std::vector<int> big;
    int* p;
    explicit UnionFind(int n) {
        if (n > 64) {
            big.resize(n);
            p = big.data();
        } else {
            p = small.data();
        }
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    int unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return 0;
        p[a] = b;
        return 1;
    }
};

int count_cycles(const int* img, int n) {
    std::uint64_t seen = 0;
    int c = 0;
    for (int i = 0; i < n; ++i) {
        if (seen >> i & 1) continue;
        ++c;
        for (int j = i; !(seen >> j & 1); j = img[j]) seen |= std::uint64_t{1} << j;
    }
    return c;
}

bool transitive_raw(int n, std::initializer_list<const int*> gens) {
    UnionFind uf(n);
    int comps = n;
    for (const int* g : gens)
        for (int i = 0; i < n; ++i) comps -= uf.unite(i, g[i]);
    return comps == 1;
}

bool transitive_vec(int n, const std::vector<const int*>& gens) {
    UnionFind uf(n);
    int comps = n;
    for (const int* g : gens)
        for (int i = 0; i < n; ++i) comps -= uf.unite(i, g[i]);
    return comps == 1;
}

int euler_genus(int chi) {
    if ((2 - chi) % 2 != 0 || 2 - chi < 0) throw InvariantError("Euler defect is odd or negative");
    return (2 - chi) / 2;
}

void require_degree(const Permutation& p, int n, const char* what) {
    if (p.degree() != n) throw InputError(std::string("degree mismatch in ") + what);
}

// Fills vertex ids for each half-edge from the cycles of sigma.
int label_cycles(const int* sigma, int n, int* vid) {
    std::fill(vid, vid + n, -1);
    int v = 0;
    for (int i = 0; i < n; ++i) {
        if (vid[i] >= 0) continue;
        for (int j = i; vid[j] < 0; j = sigma[j]) vid[j] = v;
        ++v;
    }
    return v;
}

bool raw_has_loop(const int* sigma, const int* rho, int n) {
    int vid[64];
    label_cycles(sigma, n, vid);
    for (int h = 0; h < n; ++h)
        if (vid[h] == vid[rho[h]]) return true;
    return false;
}

bool raw_has_multi(const int* sigma, const int* rho, int n) {
    int vid[64];
    label_cycles(sigma, n, vid);
    std::vector<std::pair<int, int>> es;
    for (int h = 0; h < n; ++h) {
        if (h > rho[h]) continue;
        int a = vid[h], b = vid[rho[h]];
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) != es.end();
}

struct RawFilter {
    const MapFilter& f;
    int H;
    bool operator()(const int* phi, const int* rho, const int* sigma) const {
        int fc = count_cycles(phi, H);
        int vc = count_cycles(sigma, H);
        if (f.genus) {
            int chi = vc - H / 2 + fc;
            if ((2 - chi) / 2 != *f.genus) return false;
        }
        if (f.faces && cycle_type_raw(phi, H) != *f.faces) return false;
        if (f.vertices && cycle_type_raw(sigma, H) != *f.vertices) return false;
        if ((f.loopless || f.simple) && raw_has_loop(sigma, rho, H)) return false;
        if (f.simple && raw_has_multi(sigma, rho, H)) return false;
        return true;
    }
};

// Calls fn(img) for every permutation of {0..n-1} with img[0] == first.
template <class F>
void for_each_perm_with_first(int n, int first, F&& fn) {
    std::vector<int> img(n), rest;
    for (int i = 0; i < n; ++i)
        if (i != first) rest.push_back(i);
    img[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), img.begin() + 1);
        fn(img.data());
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// Calls fn(rho) for every fixed-point-free involution with rho[0] == partner.
template <class F>
void for_each_involution_with(int n, int partner, F&& fn) {
    std::vector<int> rho(n, -1);
    rho[0] = partner;
    rho[partner] = 0;
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < n && rho[i] >= 0) ++i;
        if (i == n) {
            fn(rho.data());
            return;
        }
        for (int j = i + 1; j < n; ++j) {
            if (rho[j] >= 0) continue;
            rho[i] = j, rho[j] = i;
            rec();
            rho[i] = -1, rho[j] = -1;
        }
    };
    rec();
}

BigInt double_factorial_odd(int n) {
    BigInt r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    if (b == 0 || a % b != 0) throw InvariantError(std::string("non-integral division in ") + what);
    return a / b;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

GeneralRotation::GeneralRotation(Permutation phi_, Permutation rho_) : phi(std::move(phi_)), rho(std::move(rho_)) {
    if (phi.degree() != rho.degree()) throw InputError("phi and rho degree mismatch");
    if (phi.degree() % 2 != 0) throw InputError("odd number of half-edges");
    if (!rho.is_fixed_point_free_involution()) throw InputError("rho is not a fixed-point-free involution");
}

GeneralRotation GeneralRotation::from_sigma_rho(const Permutation& sigma, const Permutation& rho) {
    // phi(j) = sigma(rho(j))
    return GeneralRotation(compose(rho, sigma), rho);
}

BipartiteRotation::BipartiteRotation(Permutation b, Permutation w, Permutation f)
    : sigma_black(std::move(b)), sigma_white(std::move(w)), phi(std::move(f)) {
    require_degree(sigma_white, sigma_black.degree(), "bipartite rotation");
    require_degree(phi, sigma_black.degree(), "bipartite rotation");
    if (!compose(sigma_black, compose(sigma_white, phi)).is_identity())
        throw InputError("bipartite rotation: product is not the identity");
}

ConstellationRotation::ConstellationRotation(std::vector<Permutation> s, Permutation f)
    : m(static_cast<int>(s.size())), sigmas(std::move(s)), phi(std::move(f)) {
    if (m < 2) throw InputError("constellation needs m >= 2");
    Permutation prod = Permutation::identity(phi.degree());
    for (const auto& p : sigmas) {
        require_degree(p, phi.degree(), "constellation");
        prod = compose(prod, p);
    }
    if (!compose(prod, phi).is_identity()) throw InputError("constellation: product is not the identity");
}

Permutation HypermapRotation::bullet(int m, int n) {
    return class_representative(IntegerPartition(std::vector<int>(n, m)));
}

HypermapRotation::HypermapRotation(int m_, Permutation circ, Permutation f)
    : m(m_), sigma_circ(std::move(circ)), phi(std::move(f)) {
    if (m < 2) throw InputError("hypermap needs m >= 2");
    if (sigma_circ.degree() % m != 0) throw InputError("hypermap degree not divisible by m");
    n = sigma_circ.degree() / m;
    require_degree(phi, sigma_circ.degree(), "hypermap");
    IntegerPartition ct = cycle_type(sigma_circ);
    for (int part : ct.parts())
        if (part % m != 0) throw InputError("sigma_circ cycle type is not divisible by m");
    if (!compose(sigma_circ, compose(bullet(m, n), phi)).is_identity())
        throw InputError("hypermap: product is not the identity");
}

bool is_transitive(const GeneralRotation& rs) {
    return transitive_raw(rs.half_edges(), {rs.phi.raw().data(), rs.rho.raw().data()});
}

bool is_transitive(const BipartiteRotation& rs) {
    return transitive_raw(rs.edges(), {rs.sigma_black.raw().data(), rs.sigma_white.raw().data()});
}

bool is_transitive(const ConstellationRotation& rs) {
    std::vector<const int*> g;
    for (const auto& s : rs.sigmas) g.push_back(s.raw().data());
    return transitive_vec(rs.hyperedges(), g);
}

bool is_transitive(const HypermapRotation& rs) {
    Permutation b = rs.sigma_bullet();
    return transitive_raw(rs.m * rs.n, {rs.sigma_circ.raw().data(), b.raw().data()});
}

int genus(const GeneralRotation& rs) {
    if (!is_transitive(rs)) throw InputError("genus of a non-transitive rotation system");
    return euler_genus(rs.sigma().num_cycles() - rs.edges() + rs.phi.num_cycles());
}

int genus(const BipartiteRotation& rs) {
    if (!is_transitive(rs)) throw InputError("genus of a non-transitive rotation system");
    return euler_genus(rs.sigma_black.num_cycles() + rs.sigma_white.num_cycles() - rs.edges() +
                       rs.phi.num_cycles());
}

int genus(const ConstellationRotation& rs) {
    if (!is_transitive(rs)) throw InputError("genus of a non-transitive rotation system");
    int chi = rs.phi.num_cycles() + rs.hyperedges() - rs.m * rs.hyperedges();
    for (const auto& s : rs.sigmas) chi += s.num_cycles();
    return euler_genus(chi);
}

int genus(const HypermapRotation& rs) {
    if (!is_transitive(rs)) throw InputError("genus of a non-transitive rotation system");
    int chi = rs.n + rs.sigma_circ.num_cycles() - rs.m * rs.n + rs.phi.num_cycles();
    return euler_genus(chi);
}

GeneralRotation dual(const GeneralRotation& rs) { return GeneralRotation(rs.sigma(), rs.rho); }

GeneralRotation canonical_form(const GeneralRotation& rs) {
    int H = rs.half_edges();
    const auto& sg = rs.sigma();
    const int* s = sg.raw().data();
    const int* r = rs.rho.raw().data();
    std::vector<int> label(H, -1), order;
    order.reserve(H);
    label[0] = 0;
    order.push_back(0);
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int h = order[idx];
        for (int nb : {s[h], r[h]}) {
            if (label[nb] < 0) {
                label[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
        }
    }
    if (static_cast<int>(order.size()) != H) throw InputError("canonical form of a non-transitive map");
    std::vector<int> ns(H), nr(H);
    for (int h = 0; h < H; ++h) {
        ns[label[h]] = label[s[h]];
        nr[label[h]] = label[r[h]];
    }
    return GeneralRotation::from_sigma_rho(Permutation::from_zero_based(ns), Permutation::from_zero_based(nr));
}

bool root_equivalent(const GeneralRotation& a, const GeneralRotation& b) {
    return a.half_edges() == b.half_edges() && canonical_form(a) == canonical_form(b);
}

Multigraph underlying_graph(const GeneralRotation& rs) {
    int H = rs.half_edges();
    Multigraph g;
    Permutation s = rs.sigma();
    g.vertex_of.assign(H, -1);
    g.vertices = label_cycles(s.raw().data(), H, g.vertex_of.data());
    g.edge_of.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        int o = rs.rho.raw()[h];
        if (h < o) {
            g.edge_of[h] = g.edge_of[o] = static_cast<int>(g.edges.size());
            g.edges.emplace_back(g.vertex_of[h], g.vertex_of[o]);
        }
    }
    return g;
}

bool is_connected_after_removal(const Multigraph& g, const std::vector<int>& removed_vertices,
                                const std::vector<int>& removed_edges) {
    std::vector<char> vgone(g.vertices, 0), egone(g.edges.size(), 0);
    for (int v : removed_vertices) vgone[v] = 1;
    for (int e : removed_edges) egone[e] = 1;
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (egone[e]) continue;
        auto [a, b] = g.edges[e];
        if (vgone[a] || vgone[b]) continue;
        parent[find(a)] = find(b);
    }
    int root = -1;
    for (int v = 0; v < g.vertices; ++v) {
        if (vgone[v]) continue;
        if (root < 0) root = find(v);
        else if (find(v) != root) return false;
    }
    return true;
}

bool has_loop(const GeneralRotation& rs) {
    Permutation s = rs.sigma();
    return raw_has_loop(s.raw().data(), rs.rho.raw().data(), rs.half_edges());
}

bool has_multi_edge(const GeneralRotation& rs) {
    Permutation s = rs.sigma();
    return raw_has_multi(s.raw().data(), rs.rho.raw().data(), rs.half_edges());
}

bool is_nonseparable(const GeneralRotation& rs) {
    if (!is_transitive(rs)) return false;
    if (rs.edges() < 2) return false;
    if (has_loop(rs)) return false;
    Multigraph g = underlying_graph(rs);
    if (g.vertices <= 2) return true;
    for (int v = 0; v < g.vertices; ++v)
        if (!is_connected_after_removal(g, {v}, {})) return false;
    return true;
}

bool is_bridge(const GeneralRotation& rs, int edge) {
    Multigraph g = underlying_graph(rs);
    if (edge < 0 || edge >= static_cast<int>(g.edges.size())) throw InputError("edge id out of range");
    return !is_connected_after_removal(g, {}, {edge});
}

BigInt count_rooted_maps(int n, const MapFilter& filter) {
    if (n < 1) throw InputError("n_edges must be >= 1");
    const int H = 2 * n;
    if (H > 64) throw InputError("too many half-edges");
    RawFilter pass{filter, H};
    BigInt labeled;
    if (filter.faces) {
        if (filter.faces->size() != H) return 0;
        Permutation rep = class_representative(*filter.faces);
        const int* phi = rep.raw().data();
        auto counts = parallel_shards<std::uint64_t>(H - 1, [&](std::size_t shard) {
            std::uint64_t c = 0;
            std::vector<int> sigma(H);
            for_each_involution_with(H, static_cast<int>(shard) + 1, [&](const int* rho) {
                if (!transitive_raw(H, {phi, rho})) return;
                for (int i = 0; i < H; ++i) sigma[i] = phi[rho[i]];
                if (pass(phi, rho, sigma.data())) ++c;
            });
            return c;
        });
        BigInt total = 0;
        for (auto c : counts) total += c;
        labeled = total * class_size(*filter.faces);
    } else {
        std::vector<int> rho(H);
        for (int i = 0; i < H; ++i) rho[i] = i ^ 1;
        auto counts = parallel_shards<std::uint64_t>(H, [&](std::size_t shard) {
            std::uint64_t c = 0;
            std::vector<int> sigma(H);
            for_each_perm_with_first(H, static_cast<int>(shard), [&](const int* phi) {
                if (!transitive_raw(H, {phi, rho.data()})) return;
                for (int i = 0; i < H; ++i) sigma[i] = phi[rho[i]];
                if (pass(phi, rho.data(), sigma.data())) ++c;
            });
            return c;
        });
        BigInt total = 0;
        for (auto c : counts) total += c;
        labeled = total * double_factorial_odd(H - 1);
    }
    return exact_div(labeled, factorial(H - 1), "count_rooted_maps");
}

std::map<int, BigInt> count_rooted_maps_by_genus(int n) {
    std::map<int, BigInt> out;
    for (int g = 0; 4 * g <= 2 * n; ++g) {
        MapFilter f;
        f.genus = g;
        out[g] = count_rooted_maps(n, f);
    }
    return out;
}

BigInt count_transitive_pairs(int n) {
    const int H = 2 * n;
    auto counts = parallel_shards<std::uint64_t>(H, [&](std::size_t shard) {
        std::uint64_t c = 0;
        for_each_perm_with_first(H, static_cast<int>(shard), [&](const int* phi) {
            for (int partner = 1; partner < H; ++partner)
                for_each_involution_with(H, partner, [&](const int* rho) {
                    if (transitive_raw(H, {phi, rho})) ++c;
                });
        });
        return c;
    });
    BigInt total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::vector<GeneralRotation> enumerate_rooted_maps(int n, const MapFilter& filter) {
    if (n < 1) throw InputError("n_edges must be >= 1");
    const int H = 2 * n;
    RawFilter pass{filter, H};
    std::vector<int> rho(H);
    for (int i = 0; i < H; ++i) rho[i] = i ^ 1;
    Permutation rho_p = Permutation::from_zero_based(rho);
    auto shards = parallel_shards<std::set<std::vector<int>>>(H, [&](std::size_t shard) {
        std::set<std::vector<int>> keys;
        std::vector<int> sigma(H);
        for_each_perm_with_first(H, static_cast<int>(shard), [&](const int* phi) {
            if (!transitive_raw(H, {phi, rho.data()})) return;
            for (int i = 0; i < H; ++i) sigma[i] = phi[rho[i]];
            if (!pass(phi, rho.data(), sigma.data())) return;
            GeneralRotation c =
                canonical_form(GeneralRotation(Permutation::from_zero_based(std::vector<int>(phi, phi + H)), rho_p));
            std::vector<int> key = c.phi.raw();
            key.insert(key.end(), c.rho.raw().begin(), c.rho.raw().end());
            keys.insert(std::move(key));
        });
        return keys;
    });
    std::set<std::vector<int>> all;
    for (auto& s : shards) all.insert(s.begin(), s.end());
    std::vector<GeneralRotation> out;
    for (const auto& k : all)
        out.emplace_back(Permutation::from_zero_based(std::vector<int>(k.begin(), k.begin() + H)),
                         Permutation::from_zero_based(std::vector<int>(k.begin() + H, k.end())));
    return out;
}

BigInt count_rooted_bipartite(int n, std::optional<int> g, std::optional<IntegerPartition> faces) {
    if (n < 1) throw InputError("n must be >= 1");
    auto perms = all_perms(n);
    auto counts = parallel_shards<std::uint64_t>(perms.size(), [&](std::size_t shard) {
        std::uint64_t c = 0;
        const int* b = perms[shard].data();
        std::vector<int> bw(n), phi(n);
        for (const auto& wv : perms) {
            const int* w = wv.data();
            if (!transitive_raw(n, {b, w})) continue;
            for (int i = 0; i < n; ++i) bw[i] = w[b[i]];
            for (int i = 0; i < n; ++i) phi[bw[i]] = i;
            int chi = count_cycles(b, n) + count_cycles(w, n) - n + count_cycles(phi.data(), n);
            if (g && euler_genus(chi) != *g) continue;
            if (faces && cycle_type_raw(phi.data(), n) != *faces) continue;
            ++c;
        }
        return c;
    });
    BigInt total = 0;
    for (auto c : counts) total += c;
    return exact_div(total, factorial(n - 1), "count_rooted_bipartite");
}

bool ConstellationKey::operator<(const ConstellationKey& o) const {
    return std::tie(genus, phi_type, sigma_cycles, root_len) <
           std::tie(o.genus, o.phi_type, o.sigma_cycles, o.root_len);
}

std::map<ConstellationKey, BigInt> constellation_histogram(int m, int n) {
    if (m < 2 || n < 1) throw InputError("constellation_histogram needs m >= 2, n >= 1");
    auto perms = all_perms(n);
    std::map<ConstellationKey, BigInt> out;
    for (const auto& mu : partitions_of(n)) {
        Permutation rep = class_representative(mu);
        Permutation rep_inv = inverse(rep);
        const int* phiinv = rep_inv.raw().data();
        using Local = std::map<std::pair<int, std::vector<int>>, std::uint64_t>;
        auto shards = parallel_shards<Local>(perms.size(), [&](std::size_t shard) {
            Local local;
            std::vector<const int*> gens(m);
            std::vector<int> prod(n), last(n), tmp(n), idx(std::max(0, m - 2), 0);
            gens[0] = perms[shard].data();
            std::vector<int> cyc(m);
            // Iterate over sigma_2..sigma_{m-1} as an odometer over perms.
            while (true) {
                for (int j = 1; j < m - 1; ++j) gens[j] = perms[idx[j - 1]].data();
                for (int i = 0; i < n; ++i) prod[i] = i;
                for (int j = 0; j < m - 1; ++j) {
                    for (int i = 0; i < n; ++i) tmp[i] = gens[j][prod[i]];
                    prod.swap(tmp);
                }
                // sigma_m(i) = phi^{-1}(prod^{-1}(i))
                for (int i = 0; i < n; ++i) tmp[prod[i]] = i;
                for (int i = 0; i < n; ++i) last[i] = phiinv[tmp[i]];
                gens[m - 1] = last.data();
                if (transitive_vec(n, gens)) {
                    int chi = n - m * n + mu.length();
                    for (int j = 0; j < m; ++j) chi += cyc[j] = count_cycles(gens[j], n);
                    ++local[{euler_genus(chi), cyc}];
                }
                int k = 0;
                while (k < m - 2 && ++idx[k] == static_cast<int>(perms.size())) idx[k++] = 0;
                if (k == m - 2) break;
            }
            return local;
        });
        Local merged;
        for (auto& s : shards)
            for (auto& [k, v] : s) merged[k] += v;
        BigInt cls = class_size(mu);
        for (auto& [k, v] : merged) {
            for (auto [d, md] : mu.multiplicities()) {
                BigInt labeled = exact_div(cls * BigInt(v) * d * md, BigInt(n), "constellation_histogram");
                out[ConstellationKey{k.first, mu, k.second, d}] += labeled;
            }
        }
    }
    return out;
}

BigInt count_rooted_constellations(int m, int n, std::optional<int> g, std::optional<IntegerPartition> hyperfaces) {
    BigInt total = 0;
    for (const auto& [k, v] : constellation_histogram(m, n)) {
        if (g && k.genus != *g) continue;
        if (hyperfaces && k.phi_type != *hyperfaces) continue;
        total += v;
    }
    return exact_div(total, factorial(n - 1), "count_rooted_constellations");
}

std::map<std::pair<int, IntegerPartition>, BigInt> hypermap_histogram(int m, int n) {
    if (m < 2 || n < 1) throw InputError("hypermap_histogram needs m >= 2, n >= 1");
    const int N = m * n;
    if (N > 12) throw InputError("hypermap enumeration limited to mn <= 12");
    Permutation bul = HypermapRotation::bullet(m, n);
    const int* b = bul.raw().data();
    std::map<std::pair<int, IntegerPartition>, std::uint64_t> acc;
    std::vector<int> circ(N, -1), cb(N), phi(N);
    std::vector<int> lens;
    std::function<void()> rec = [&]() {
        int start = 0;
        while (start < N && circ[start] >= 0) ++start;
        if (start == N) {
            if (!transitive_raw(N, {circ.data(), b})) return;
            for (int i = 0; i < N; ++i) cb[i] = b[circ[i]];
            for (int i = 0; i < N; ++i) phi[cb[i]] = i;
            std::vector<int> mu;
            for (int l : lens) mu.push_back(l / m);
            IntegerPartition mup(mu);
            int chi = n + mup.length() - N + count_cycles(phi.data(), N);
            ++acc[{euler_genus(chi), mup}];
            return;
        }
        int free_count = 0;
        for (int i = 0; i < N; ++i) free_count += circ[i] < 0;
        // Build a cycle through start of length L, L a multiple of m.
        std::vector<int> cyc{start};
        std::function<void()> grow = [&]() {
            int L = static_cast<int>(cyc.size());
            if (L % m == 0) {
                circ[cyc.back()] = start;
                lens.push_back(L);
                rec();
                lens.pop_back();
                circ[cyc.back()] = -2;
            }
            if (L == free_count) return;
            for (int j = 0; j < N; ++j) {
                if (circ[j] != -1) continue;
                int prev = cyc.back();
                circ[prev] = j;
                circ[j] = -2;
                cyc.push_back(j);
                grow();
                cyc.pop_back();
                circ[j] = -1;
                circ[prev] = -2;
            }
        };
        circ[start] = -2;
        grow();
        circ[start] = -1;
    };
    rec();
    std::map<std::pair<int, IntegerPartition>, BigInt> out;
    for (auto& [k, v] : acc) out[k] = BigInt(v);
    return out;
}

BigInt count_rooted_hypermaps(int m, int n, std::optional<int> g, std::optional<IntegerPartition> hyperfaces) {
    BigInt total = 0;
    for (const auto& [k, v] : hypermap_histogram(m, n)) {
        if (g && k.first != *g) continue;
        if (hyperfaces && k.second != *hyperfaces) continue;
        total += v;
    }
    return exact_div(total, factorial(n - 1) * ipow(BigInt(m), n - 1), "count_rooted_hypermaps");
}

}  // namespace mapforge
