#include "mapforge/tamari.hpp"

#include "mapforge/parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace mapforge {

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
    int h = 0;
    for (char c : word_) {
        if (c == 'u') ++h;
        else if (c == 'd') --h;
        else throw InputError("Dyck path letters must be u or d");
        if (h < 0) throw InputError("Dyck path goes below the axis: " + word_);
    }
    if (h != 0) throw InputError("Dyck path does not return to the axis: " + word_);
}

int DyckPath::contacts() const {
    int h = 0, c = 1;
    for (char s : word_) {
        h += s == 'u' ? 1 : -1;
        c += h == 0;
    }
    return c;
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> h(word_.size() + 1, 0);
    for (size_t i = 0; i < word_.size(); ++i) h[i + 1] = h[i] + (word_[i] == 'u' ? 1 : -1);
    return h;
}

GridPath::GridPath(std::string word) : word_(std::move(word)) {
    for (char c : word_)
        if (c != 'N' && c != 'E') throw InputError("grid path letters must be N or E");
}

int GridPath::norths() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'N')); }
int GridPath::easts() const { return length() - norths(); }

GridPath GridPath::reversed_swapped() const {
    std::string w(word_.rbegin(), word_.rend());
    for (char& c : w) c = c == 'N' ? 'E' : 'N';
    return GridPath(w);
}

std::vector<DyckPath> dyck_paths(int n) {
    if (n < 0) throw InputError("negative size");
    std::vector<DyckPath> out;
    std::string w;
    std::function<void(int, int)> rec = [&](int ups, int h) {
        if (static_cast<int>(w.size()) == 2 * n) {
            out.emplace_back(w);
            return;
        }
        if (h > 0) {
            w.push_back('d');
            rec(ups, h - 1);
            w.pop_back();
        }
        if (ups < n) {
            w.push_back('u');
            rec(ups + 1, h + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<GridPath> grid_words(int length) {
    std::vector<GridPath> out;
    for (int mask = 0; mask < (1 << length); ++mask) {
        std::string w(length, 'N');
        for (int i = 0; i < length; ++i)
            if (mask >> (length - 1 - i) & 1) w[i] = 'E';
        out.emplace_back(w);
    }
    return out;
}

std::vector<int> distance_function(const DyckPath& p) {
    const auto& w = p.word();
    std::vector<int> out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 'u') continue;
        int h = 0;
        size_t j = i;
        do {
            h += w[j] == 'u' ? 1 : -1;
            ++j;
        } while (h > 0);
        out.push_back(static_cast<int>(j - i - 1));
    }
    return out;
}

bool tamari_leq(const DyckPath& p, const DyckPath& q) {
    if (p.size() != q.size()) throw InputError("Dyck paths of different sizes");
    auto a = distance_function(p), b = distance_function(q);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace {
GridPath to_grid(const DyckPath& p) {
    std::string w = p.word();
    for (char& c : w) c = c == 'u' ? 'N' : 'E';
    return GridPath(w);
}

DyckPath to_dyck(const GridPath& g) {
    std::string w = g.word();
    for (char& c : w) c = c == 'N' ? 'u' : 'd';
    return DyckPath(w);
}

GridPath staircase(int n) {
    std::string w;
    for (int i = 0; i < n; ++i) w += "NE";
    return GridPath(w);
}

// Largest x reached by v at each height.
std::vector<int> canopy_reach(const GridPath& v) {
    std::vector<int> reach(v.norths() + 1, 0);
    int x = 0, y = 0;
    for (char c : v.word()) {
        if (c == 'N') reach[++y] = x;
        else reach[y] = ++x;
    }
    return reach;
}
}  // namespace

std::vector<DyckPath> covers(const DyckPath& p) {
    std::vector<DyckPath> out;
    for (auto& g : grid_covers(to_grid(p), staircase(p.size()))) out.push_back(to_dyck(g));
    return out;
}

GridPath type_of(const DyckPath& p) {
    const auto& w = p.word();
    std::string t;
    int seen = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 'u') continue;
        if (++seen == p.size()) break;
        t.push_back(i + 1 < w.size() && w[i + 1] == 'u' ? 'E' : 'N');
    }
    return GridPath(t);
}

std::vector<GridPath> paths_above(const GridPath& v) {
    auto reach = canopy_reach(v);
    int H = v.norths(), W = v.easts();
    std::vector<GridPath> out;
    std::string w;
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == W && y == H) {
            out.emplace_back(w);
            return;
        }
        if (y < H) {
            w.push_back('N');
            rec(x, y + 1);
            w.pop_back();
        }
        if (x < reach[y]) {
            w.push_back('E');
            rec(x + 1, y);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<GridPath> grid_covers(const GridPath& path, const GridPath& v) {
    auto reach = canopy_reach(v);
    const auto& w = path.word();
    int L = static_cast<int>(w.size());
    std::vector<int> xs(L + 1, 0), ys(L + 1, 0);
    for (int i = 0; i < L; ++i) {
        xs[i + 1] = xs[i] + (w[i] == 'E');
        ys[i + 1] = ys[i] + (w[i] == 'N');
    }
    auto hdist = [&](int i) { return reach[ys[i]] - xs[i]; };
    std::vector<GridPath> out;
    for (int i = 1; i < L; ++i) {
        if (w[i - 1] != 'E' || w[i] != 'N') continue;
        int j = i + 1;
        while (hdist(j) != hdist(i)) ++j;
        std::string nw = w.substr(0, i - 1) + w.substr(i, j - i) + "E" + w.substr(j);
        out.emplace_back(nw);
    }
    return out;
}

BigInt Lattice::interval_count() const {
    BigInt c = 0;
    for (auto& row : leq)
        for (char b : row) c += b;
    return c;
}

Lattice Lattice::dual() const {
    Lattice d;
    d.elements = elements;
    d.up.assign(size(), {});
    for (int i = 0; i < size(); ++i)
        for (int j : up[i]) d.up[j].push_back(i);
    d.leq.assign(size(), std::vector<char>(size(), 0));
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) d.leq[i][j] = leq[j][i];
    return d;
}

int Lattice::index_of(const std::string& e) const {
    auto it = std::find(elements.begin(), elements.end(), e);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

void close_order(Lattice& l) {
    int n = l.size();
    auto rows = parallel_shards<std::vector<char>>(n, [&](size_t s) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : l.up[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        return seen;
    });
    l.leq = std::move(rows);
}

namespace {
Lattice build(std::vector<std::string> elems, const std::function<std::vector<std::string>(const std::string&)>& cov) {
    Lattice l;
    l.elements = std::move(elems);
    std::map<std::string, int> idx;
    for (int i = 0; i < l.size(); ++i) idx[l.elements[i]] = i;
    l.up.assign(l.size(), {});
    for (int i = 0; i < l.size(); ++i)
        for (auto& c : cov(l.elements[i])) {
            auto it = idx.find(c);
            if (it != idx.end()) l.up[i].push_back(it->second);
        }
    close_order(l);
    return l;
}
}  // namespace

Lattice tamari_lattice(int n) {
    std::vector<std::string> el;
    for (auto& p : dyck_paths(n)) el.push_back(p.word());
    return build(el, [](const std::string& w) {
        std::vector<std::string> out;
        for (auto& c : covers(DyckPath(w))) out.push_back(c.word());
        return out;
    });
}

Lattice nu_tamari(const GridPath& v) {
    std::vector<std::string> el;
    for (auto& p : paths_above(v)) el.push_back(p.word());
    return build(el, [&](const std::string& w) {
        std::vector<std::string> out;
        for (auto& c : grid_covers(GridPath(w), v)) out.push_back(c.word());
        return out;
    });
}

Lattice type_class_interval(const GridPath& v) {
    std::vector<std::string> el;
    for (auto& p : dyck_paths(v.length() + 1))
        if (type_of(p) == v) el.push_back(p.word());
    return build(el, [](const std::string& w) {
        std::vector<std::string> out;
        for (auto& c : covers(DyckPath(w))) out.push_back(c.word());
        return out;
    });
}

Lattice m_tamari(int m, int n) {
    if (m < 1 || n < 0) throw InputError("m-Tamari needs m >= 1 and n >= 0");
    std::string w;
    for (int i = 0; i < n; ++i) w += "N" + std::string(m, 'E');
    return nu_tamari(GridPath(w));
}

std::optional<std::vector<int>> lattice_isomorphism(const Lattice& a, const Lattice& b) {
    int n = a.size();
    if (n != b.size()) return std::nullopt;
    auto matrix = [n](const Lattice& l) {
        std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j : l.up[i]) m[i][j] = 1;
        return m;
    };
    auto ca = matrix(a), cb = matrix(b);
    auto signature = [n](const Lattice& l, const std::vector<std::vector<char>>& c) {
        std::vector<std::array<int, 4>> s(n);
        for (int i = 0; i < n; ++i) {
            int in = 0, below = 0, above = 0;
            for (int j = 0; j < n; ++j) {
                in += c[j][i];
                below += l.leq[j][i];
                above += l.leq[i][j];
            }
            s[i] = {static_cast<int>(l.up[i].size()), in, below, above};
        }
        return s;
    };
    auto sa = signature(a, ca), sb = signature(b, cb);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    // Map elements of a in order of the number of elements below them.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sa[x][2] < sa[y][2]; });
    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int k) {
        if (k == n) return true;
        int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y] || sb[y] != sa[x]) continue;
            bool ok = true;
            for (int t = 0; t < k && ok; ++t) {
                int z = order[t];
                ok = ca[x][z] == cb[y][f[z]] && ca[z][x] == cb[f[z]][y];
            }
            if (!ok) continue;
            f[x] = y;
            used[y] = 1;
            if (rec(k + 1)) return true;
            used[y] = 0;
            f[x] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return f;
}

bool lattices_isomorphic(const Lattice& a, const Lattice& b) { return lattice_isomorphism(a, b).has_value(); }

bool is_sync_interval(const DyckPath& lower, const DyckPath& upper) {
    return lower.size() == upper.size() && type_of(lower) == type_of(upper) && tamari_leq(lower, upper);
}

std::vector<SyncInterval> sync_intervals(int n) {
    auto paths = dyck_paths(n);
    std::map<GridPath, std::vector<DyckPath>> by_type;
    for (auto& p : paths) by_type[type_of(p)].push_back(p);
    std::vector<SyncInterval> out;
    for (auto& [t, cls] : by_type)
        for (auto& p : cls)
            for (auto& q : cls)
                if (tamari_leq(p, q)) out.push_back({p, q});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SyncInterval> sync_intervals_recursive(int n) {
    std::vector<std::vector<SyncInterval>> all(n + 1);
    all[0].push_back({DyckPath(), DyckPath()});
    for (int s = 1; s <= n; ++s) {
        for (int n1 = 0; n1 < s; ++n1) {
            int n2 = s - 1 - n1;
            for (auto& i1 : all[n1]) {
                // Split the lower path at each contact other than the first.
                const auto& w = i1.lower.word();
                std::vector<size_t> cuts;
                if (w.empty()) cuts.push_back(0);
                auto h = i1.lower.heights();
                for (size_t k = 1; k < h.size(); ++k)
                    if (h[k] == 0) cuts.push_back(k);
                for (size_t c : cuts) {
                    std::string pl = w.substr(0, c), pr = w.substr(c);
                    for (auto& i2 : all[n2]) {
                        std::string P = "u" + pl + "d" + pr + i2.lower.word();
                        std::string Q = "u" + i1.upper.word() + "d" + i2.upper.word();
                        all[s].push_back({DyckPath(P), DyckPath(Q)});
                    }
                }
            }
        }
    }
    auto out = all[n];
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<BigInt>> sync_series(int nmax) {
    std::vector<std::vector<BigInt>> f(nmax + 1);
    auto add_into = [](std::vector<BigInt>& dst, const std::vector<BigInt>& src, const BigInt& scale) {
        if (dst.size() < src.size()) dst.resize(src.size(), 0);
        for (size_t i = 0; i < src.size(); ++i) dst[i] += scale * src[i];
    };
    auto divided = [](const std::vector<BigInt>& p) {
        std::vector<BigInt> out(p.empty() ? 0 : p.size() - 1, 0);
        for (size_t k = 1; k < p.size(); ++k)
            for (size_t i = 0; i < k; ++i) out[i] += p[k];
        return out;
    };
    // a = 1 + F, b = 1 + (F - F(1))/(x - 1), both as series in t with polynomial coefficients.
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::vector<BigInt>> a(n), b(n);
        for (int k = 0; k < n; ++k) {
            a[k] = k == 0 ? std::vector<BigInt>{1} : f[k];
            b[k] = k == 0 ? std::vector<BigInt>{1} : divided(f[k]);
        }
        std::vector<BigInt> prod;
        for (int k = 0; k < n; ++k) {
            int l = n - 1 - k;
            std::vector<BigInt> term(a[k].size() + b[l].size(), 0);
            for (size_t i = 0; i < a[k].size(); ++i)
                for (size_t j = 0; j < b[l].size(); ++j) term[i + j] += a[k][i] * b[l][j];
            add_into(prod, term, 1);
        }
        f[n].assign(prod.size() + 1, 0);
        for (size_t i = 0; i < prod.size(); ++i) f[n][i + 1] = prod[i];
        while (!f[n].empty() && f[n].back() == 0) f[n].pop_back();
    }
    return f;
}

BigInt tamari_interval_count(int n) { return tamari_lattice(n).interval_count(); }

BigInt tamari_interval_formula(int n) {
    if (n < 1) throw InputError("size must be positive");
    return 2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2));
}

BigInt sync_interval_formula(int n) {
    if (n < 1) throw InputError("size must be positive");
    return 2 * factorial(3 * n) / (factorial(n + 1) * factorial(2 * n + 1));
}

BigInt m_tamari_interval_formula(int m, int n) {
    if (n < 1 || m < 1) throw InputError("m and n must be positive");
    BigInt num = BigInt(m + 1) * binomial(static_cast<long>(m + 1) * (m + 1) * n + m, n - 1);
    BigInt den = BigInt(n) * (BigInt(m) * n + 1);
    if (num % den != 0) throw InvariantError("m-Tamari formula is not integral");
    return num / den;
}

std::map<std::string, std::string> tamari_antiautomorphism(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::string, std::string>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto l = tamari_lattice(n);
    auto f = lattice_isomorphism(l, l.dual());
    if (!f) throw InvariantError("Tamari lattice is not self-dual");
    std::map<std::string, std::string> out;
    for (int i = 0; i < l.size(); ++i) out[l.elements[i]] = l.elements[(*f)[i]];
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = out;
    return out;
}

SyncInterval dual_interval(const SyncInterval& iv) {
    if (!is_sync_interval(iv.lower, iv.upper)) throw InputError("dual_interval: not a synchronized interval");
    auto f = tamari_antiautomorphism(iv.lower.size());
    return {DyckPath(f.at(iv.upper.word())), DyckPath(f.at(iv.lower.word()))};
}

}  // namespace mapforge
