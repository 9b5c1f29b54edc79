#include "mapforge/bijector.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mapforge {

std::vector<DecoratedTree::Node> DecoratedTree::nodes() const {
    std::vector<Node> out(1);
    int cur = 0, leaves = 0;
    for (size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] == 'u') {
            Node n;
            n.parent = cur;
            n.depth = out[cur].depth + 1;
            out.push_back(n);
            int id = static_cast<int>(out.size()) - 1;
            out[cur].children.push_back(id);
            cur = id;
        } else if (shape[i] == 'd') {
            if (cur == 0) throw InputError("tree shape is not a Dyck word");
            if (out[cur].children.empty()) out[cur].leaf = leaves++;
            cur = out[cur].parent;
        } else {
            throw InputError("tree shape letters must be u or d");
        }
    }
    if (cur != 0) throw InputError("tree shape is not a Dyck word");
    if (leaves != static_cast<int>(labels.size())) throw InputError("label count differs from leaf count");
    return out;
}

DecoratedTree make_tree(const std::vector<std::vector<int>>& children, const std::vector<int>& node_labels) {
    DecoratedTree t;
    std::function<void(int)> rec = [&](int v) {
        for (int c : children[v]) {
            t.shape.push_back('u');
            if (children[c].empty()) t.labels.push_back(node_labels[c]);
            rec(c);
            t.shape.push_back('d');
        }
    };
    rec(0);
    return t;
}

std::optional<std::string> tree_violation(const DecoratedTree& t) {
    std::vector<DecoratedTree::Node> nd;
    try {
        nd = t.nodes();
    } catch (const InputError&) {
        return std::string("shape");
    }
    int N = static_cast<int>(nd.size());
    // leaves below each node in traversal order
    std::vector<std::vector<int>> below(N);
    std::function<void(int)> collect = [&](int v) {
        if (nd[v].leaf >= 0) below[v].push_back(v);
        for (int c : nd[v].children) {
            collect(c);
            below[v].insert(below[v].end(), below[c].begin(), below[c].end());
        }
    };
    collect(0);
    auto label = [&](int leaf_node) { return t.labels[nd[leaf_node].leaf]; };
    for (int v = 1; v < N; ++v)
        if (nd[v].leaf >= 0) {
            int p = nd[nd[v].parent].depth;
            if (label(v) < -1 || label(v) >= p) return std::string("C1");
        }
    for (int v = 1; v < N; ++v) {
        if (nd[v].leaf >= 0) continue;
        int p = nd[v].depth;
        bool ok = false;
        for (int l : below[v]) ok |= label(l) <= p - 2;
        if (!ok) return std::string("C2");
    }
    for (int v = 0; v < N; ++v) {
        int p = nd[v].depth;
        for (int c : nd[v].children) {
            bool low_seen = false;
            for (int l : below[c]) {
                if (label(l) == p && low_seen) return std::string("C3");
                if (label(l) < p) low_seen = true;
            }
        }
    }
    return std::nullopt;
}

bool is_decorated(const DecoratedTree& t) { return !tree_violation(t).has_value(); }

std::vector<DecoratedTree> decorated_trees(int n_edges) {
    if (n_edges < 1) throw InputError("decorated trees need at least one edge");
    std::vector<DecoratedTree> out;
    for (auto& p : dyck_paths(n_edges)) {
        DecoratedTree t{p.word(), {}};
        // parent depth of each leaf, in traversal order
        std::vector<int> bound;
        int h = 0;
        for (size_t i = 0; i < t.shape.size(); ++i) {
            if (t.shape[i] == 'u') {
                if (t.shape[i + 1] == 'd') bound.push_back(h);
                ++h;
            } else {
                --h;
            }
        }
        t.labels.assign(bound.size(), -1);
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == bound.size()) {
                if (is_decorated(t)) out.push_back(t);
                return;
            }
            for (int l = -1; l < bound[k]; ++l) {
                t.labels[k] = l;
                rec(k + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GeneralRotation> nonseparable_planar_maps(int n_edges) {
    MapFilter f;
    f.genus = 0;
    f.loopless = true;
    std::vector<GeneralRotation> out;
    for (auto& m : enumerate_rooted_maps(n_edges, f))
        if (is_nonseparable(m)) out.push_back(m);
    return out;
}

namespace {
struct Rot {
    std::vector<int> sigma, sigma_inv, rho, vertex;
    int cw(int h) const { return kClockwiseIsSigmaInverse ? sigma_inv[h] : sigma[h]; }
};

Rot unpack(const GeneralRotation& m) {
    Rot r;
    r.sigma = m.sigma().raw();
    r.rho = m.rho.raw();
    int H = static_cast<int>(r.sigma.size());
    r.sigma_inv.assign(H, 0);
    for (int i = 0; i < H; ++i) r.sigma_inv[r.sigma[i]] = i;
    r.vertex.assign(H, -1);
    int nv = 0;
    for (int i = 0; i < H; ++i) {
        if (r.vertex[i] >= 0) continue;
        for (int j = i; r.vertex[j] < 0; j = r.sigma[j]) r.vertex[j] = nv;
        ++nv;
    }
    return r;
}
}  // namespace

DecoratedTree explore_T(const GeneralRotation& map) {
    if (map.edges() < 2) throw InputError("explore_T: map needs at least two edges");
    if (!is_transitive(map) || genus(map) != 0) throw InputError("explore_T: map is not planar");
    if (!is_nonseparable(map)) throw InputError("explore_T: map is separable");
    Rot r = unpack(map);
    int H = map.half_edges();
    int nv = *std::max_element(r.vertex.begin(), r.vertex.end()) + 1;
    std::vector<int> depth(nv, -2);
    std::vector<char> done(H, 0);
    std::vector<std::vector<int>> children(1);
    std::vector<int> node_label(1, 0);
    const int h0 = 0;
    depth[r.vertex[h0]] = -1;
    done[h0] = done[r.rho[h0]] = 1;
    std::function<void(int, int, int)> explore = [&](int w, int h_in, int node) {
        std::vector<int> order;
        for (int h = r.cw(h_in); h != h_in; h = r.cw(h)) {
            if (done[h]) continue;
            done[h] = done[r.rho[h]] = 1;
            int x = r.vertex[r.rho[h]];
            children.emplace_back();
            node_label.push_back(0);
            int id = static_cast<int>(children.size()) - 1;
            order.push_back(id);
            if (depth[x] == -2) {
                depth[x] = depth[w] + 1;
                explore(x, r.rho[h], id);
            } else {
                node_label[id] = depth[x];
            }
        }
        std::reverse(order.begin(), order.end());
        children[node] = order;
    };
    int u = r.vertex[r.rho[h0]];
    depth[u] = 0;
    explore(u, r.rho[h0], 0);
    for (int h = 0; h < H; ++h)
        if (!done[h]) throw InvariantError("explore_T: edge left unexplored");
    return make_tree(children, node_label);
}

GeneralRotation rebuild_S(const DecoratedTree& t) {
    if (auto bad = tree_violation(t)) throw InputError("rebuild_S: invalid decorated tree (" + *bad + ")");
    auto nd = t.nodes();
    int N = static_cast<int>(nd.size());
    int E = t.edges() + 1;
    // half-edges: 0 at v and 1 at the root for the root edge; node k > 0 has
    // 2k at its parent and 2k+1 at itself (a leaf's 2k+1 ends at its target).
    std::vector<int> rho(2 * E);
    for (int h = 0; h < 2 * E; ++h) rho[h] = h ^ 1;
    // counter-clockwise lists; index N stands for v
    std::vector<std::vector<int>> ccw(N + 1);
    ccw[N].push_back(0);
    for (int v = 0; v < N; ++v) {
        if (nd[v].leaf >= 0) continue;
        ccw[v].push_back(v == 0 ? 1 : 2 * v + 1);
        for (int c : nd[v].children) ccw[v].push_back(2 * c);
    }
    std::vector<int> leaves;
    for (int v = 0; v < N; ++v)
        if (nd[v].leaf >= 0) leaves.push_back(v);
    std::sort(leaves.begin(), leaves.end(), [&](int a, int b) { return nd[a].leaf > nd[b].leaf; });
    for (int l : leaves) {
        int p = t.labels[nd[l].leaf];
        int s, e;
        if (p == -1) {
            s = N;
            e = 0;
        } else {
            int below = l;
            while (nd[nd[below].parent].depth > p) below = nd[below].parent;
            s = nd[below].parent;
            e = 2 * below;
        }
        auto& lst = ccw[s];
        auto it = std::find(lst.begin(), lst.end(), e);
        lst.insert(it, 2 * l + 1);  // cw(e) is the new half-edge
    }
    std::vector<int> sigma(2 * E, -1);
    for (auto& lst : ccw) {
        if (lst.empty()) continue;
        for (size_t i = 0; i < lst.size(); ++i) sigma[lst[i]] = lst[(i + 1) % lst.size()];
    }
    if (!kClockwiseIsSigmaInverse) {
        std::vector<int> inv(2 * E);
        for (int i = 0; i < 2 * E; ++i) inv[sigma[i]] = i;
        sigma = inv;
    }
    auto m = GeneralRotation::from_sigma_rho(Permutation::from_zero_based(sigma), Permutation::from_zero_based(rho));
    return canonical_form(m);
}

std::vector<int> charges(const DecoratedTree& t) {
    auto nd = t.nodes();
    int N = static_cast<int>(nd.size());
    std::vector<int> ch(t.labels.size(), 0);
    // first eligible leaf below each internal node, found by a post-order pass
    std::function<std::vector<int>(int)> leaves_below = [&](int v) {
        std::vector<int> out;
        if (nd[v].leaf >= 0) out.push_back(v);
        for (int c : nd[v].children) {
            auto sub = leaves_below(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        if (v > 0 && nd[v].leaf < 0) {
            int p = nd[v].depth;
            auto it = std::find_if(out.begin(), out.end(), [&](int l) { return t.labels[nd[l].leaf] <= p - 2; });
            if (it == out.end()) throw InputError("charges: condition C2 fails");
            ++ch[nd[*it].leaf];
        }
        return out;
    };
    leaves_below(0);
    (void)N;
    return ch;
}

DyckPath upper_Q(const DecoratedTree& t) { return DyckPath(t.shape); }

DyckPath lower_P(const DecoratedTree& t) {
    auto ch = charges(t);
    std::string w;
    int leaf = 0;
    for (size_t i = 0; i < t.shape.size(); ++i) {
        if (t.shape[i] != 'u') continue;
        if (t.shape[i + 1] == 'd') {
            w += "u" + std::string(1 + ch[leaf], 'd');
            ++leaf;
        } else {
            w += "u";
        }
    }
    return DyckPath(w);
}

SyncInterval to_interval_PQ(const DecoratedTree& t) {
    if (auto bad = tree_violation(t)) throw InputError("to_interval_PQ: invalid decorated tree (" + *bad + ")");
    return {lower_P(t), upper_Q(t)};
}

DecoratedTree from_interval_R(const SyncInterval& iv) {
    if (iv.lower.size() < 1 || !is_sync_interval(iv.lower, iv.upper))
        throw InputError("from_interval_R: not a synchronized interval");
    DecoratedTree t{iv.upper.word(), {}};
    const auto& P = iv.lower.word();
    auto hp = iv.lower.heights();
    auto hq = iv.upper.heights();
    std::vector<int> up_pos_p, up_depth_q;
    for (size_t i = 0; i < P.size(); ++i)
        if (P[i] == 'u') up_pos_p.push_back(static_cast<int>(i));
    for (size_t i = 0; i < t.shape.size(); ++i)
        if (t.shape[i] == 'u') up_depth_q.push_back(hq[i + 1]);
    int ups = 0;
    for (size_t i = 0; i < t.shape.size(); ++i) {
        if (t.shape[i] != 'u') continue;
        int idx = ups++;
        if (t.shape[i + 1] != 'd') continue;
        int pos = up_pos_p[idx] + 1;
        while (pos < static_cast<int>(P.size()) && P[pos] == 'd') ++pos;
        int h = hp[pos];
        int label = -1;
        for (int k = up_pos_p[idx]; k >= 1; --k) {
            if (hp[k] < h) break;
            if (hp[k] == h && P[k - 1] == 'u' && k < static_cast<int>(P.size()) && P[k] == 'u') {
                int j = static_cast<int>(std::count(P.begin(), P.begin() + k, 'u'));
                label = up_depth_q[j - 1] - 1;
                break;
            }
        }
        t.labels.push_back(label);
    }
    return t;
}

SyncInterval map_to_interval(const GeneralRotation& map) { return to_interval_PQ(explore_T(map)); }

GeneralRotation interval_to_map(const SyncInterval& iv) { return rebuild_S(from_interval_R(iv)); }

GeneralRotation transported_dual(const GeneralRotation& map) {
    auto d = dual(map);
    auto s = d.sigma().raw();
    auto rho = d.rho.raw();
    int H = static_cast<int>(s.size());
    int r = map.sigma().raw()[0];
    std::vector<int> mirrored(H);
    for (int i = 0; i < H; ++i) mirrored[s[i]] = i;
    // swap labels 0 and r so that r becomes the root
    auto lab = [&](int i) { return i == 0 ? r : i == r ? 0 : i; };
    std::vector<int> s2(H), r2(H);
    for (int i = 0; i < H; ++i) {
        s2[lab(i)] = lab(mirrored[i]);
        r2[lab(i)] = lab(rho[i]);
    }
    return canonical_form(GeneralRotation::from_sigma_rho(Permutation::from_zero_based(s2), Permutation::from_zero_based(r2)));
}

}  // namespace mapforge
