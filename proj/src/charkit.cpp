#include "mapforge/charkit.hpp"

#include "mapforge/mapkit.hpp"
#include "mapforge/parallel.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace mapforge {

namespace {

using Beta = std::vector<int>;  // strictly decreasing bead positions

Beta to_beta(const std::vector<int>& shape, int L) {
    Beta b(L);
    for (int i = 0; i < L; ++i) b[i] = (i < static_cast<int>(shape.size()) ? shape[i] : 0) + L - 1 - i;
    return b;
}

std::vector<int> from_beta(Beta b) {
    std::sort(b.rbegin(), b.rend());
    int L = static_cast<int>(b.size());
    std::vector<int> shape;
    for (int i = 0; i < L; ++i) {
        int part = b[i] - (L - 1 - i);
        if (part > 0) shape.push_back(part);
    }
    return shape;
}

struct RibbonMove {
    std::vector<int> rest;
    int height;
};

// All ways of removing a k-ribbon from shape.
std::vector<RibbonMove> remove_ribbons(const std::vector<int>& shape, int k) {
    int L = static_cast<int>(shape.size());
    Beta b = to_beta(shape, L);
    std::set<int> beads(b.begin(), b.end());
    std::vector<RibbonMove> out;
    for (int i = 0; i < L; ++i) {
        int from = b[i], to = from - k;
        if (to < 0 || beads.count(to)) continue;
        int between = 0;
        for (int x : b) between += x > to && x < from;
        Beta nb = b;
        nb[i] = to;
        out.push_back({from_beta(nb), between});
    }
    return out;
}

std::mutex g_mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> g_mn_cache;

BigInt mn_rec(const std::vector<int>& shape, const std::vector<int>& type) {
    if (type.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, type);
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_cache.find(key);
        if (it != g_mn_cache.end()) return it->second;
    }
    std::vector<int> rest_type(type.begin() + 1, type.end());
    BigInt total = 0;
    for (auto& mv : remove_ribbons(shape, type[0])) {
        BigInt sub = mn_rec(mv.rest, rest_type);
        if (mv.height % 2) total -= sub;
        else total += sub;
    }
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache.emplace(std::move(key), total);
    return total;
}

std::mutex g_table_mutex;
std::map<int, std::map<IntegerPartition, std::map<IntegerPartition, BigInt>>> g_tables;

const std::map<IntegerPartition, std::map<IntegerPartition, BigInt>>& char_table(int n) {
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(n);
        if (it != g_tables.end()) return it->second;
    }
    auto parts = partitions_of(n);
    auto rows = parallel_shards<std::map<IntegerPartition, BigInt>>(parts.size(), [&](std::size_t i) {
        std::map<IntegerPartition, BigInt> row;
        for (auto& mu : parts) row[mu] = mn_character(parts[i], mu);
        return row;
    });
    std::map<IntegerPartition, std::map<IntegerPartition, BigInt>> t;
    for (size_t i = 0; i < parts.size(); ++i) t[parts[i]] = std::move(rows[i]);
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return g_tables.emplace(n, std::move(t)).first->second;
}

// Connection coefficients c[lambda][mu][nu] for S_n, by convolution over all of S_n.
struct StructureConstants {
    std::vector<IntegerPartition> classes;
    std::vector<std::vector<std::vector<std::uint64_t>>> c;
};

std::mutex g_sc_mutex;
std::map<int, StructureConstants> g_sc;

const StructureConstants& structure_constants(int n) {
    {
        std::lock_guard<std::mutex> lock(g_sc_mutex);
        auto it = g_sc.find(n);
        if (it != g_sc.end()) return it->second;
    }
    if (n > 8) throw InputError("convolution product limited to n <= 8");
    StructureConstants sc;
    sc.classes = partitions_of(n);
    std::map<IntegerPartition, int> idx;
    for (size_t i = 0; i < sc.classes.size(); ++i) idx[sc.classes[i]] = static_cast<int>(i);
    std::uint64_t total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    std::vector<int> type_of(total);
    std::vector<std::vector<int>> perms(total, std::vector<int>(n));
    for (std::uint64_t r = 0; r < total; ++r) {
        perm_unrank(r, n, perms[r].data());
        type_of[r] = idx[cycle_type_raw(perms[r].data(), n)];
    }
    size_t P = sc.classes.size();
    sc.c.assign(P, std::vector<std::vector<std::uint64_t>>(P, std::vector<std::uint64_t>(P, 0)));
    auto cols = parallel_shards<std::vector<std::vector<std::uint64_t>>>(P, [&](std::size_t nu) {
        std::vector<std::vector<std::uint64_t>> local(P, std::vector<std::uint64_t>(P, 0));
        Permutation rep = class_representative(sc.classes[nu]);
        const int* r = rep.raw().data();
        std::vector<int> ainv(n), b(n);
        for (std::uint64_t ra = 0; ra < total; ++ra) {
            const auto& a = perms[ra];
            for (int i = 0; i < n; ++i) ainv[a[i]] = i;
            for (int j = 0; j < n; ++j) b[j] = r[ainv[j]];
            ++local[type_of[ra]][type_of[perm_rank(b.data(), n)]];
        }
        return local;
    });
    for (size_t nu = 0; nu < P; ++nu)
        for (size_t l = 0; l < P; ++l)
            for (size_t m = 0; m < P; ++m) sc.c[l][m][nu] = cols[nu][l][m];
    std::lock_guard<std::mutex> lock(g_sc_mutex);
    return g_sc.emplace(n, std::move(sc)).first->second;
}

CenterElement product_convolution(const CenterElement& a, const CenterElement& b) {
    const auto& sc = structure_constants(a.n);
    std::map<IntegerPartition, int> idx;
    for (size_t i = 0; i < sc.classes.size(); ++i) idx[sc.classes[i]] = static_cast<int>(i);
    CenterElement out(a.n);
    for (auto& [la, ca] : a.coeffs) {
        if (ca == 0) continue;
        for (auto& [lb, cb] : b.coeffs) {
            if (cb == 0) continue;
            const auto& row = sc.c[idx[la]][idx[lb]];
            for (size_t nu = 0; nu < row.size(); ++nu)
                if (row[nu]) out.coeffs[sc.classes[nu]] += ca * cb * Rational(BigInt(row[nu]));
        }
    }
    return out;
}

// Central character of a in the idempotent basis: a = sum_theta hat(theta) F_theta.
std::map<IntegerPartition, Rational> to_idempotent_basis(const CenterElement& a) {
    const auto& table = char_table(a.n);
    std::map<IntegerPartition, Rational> out;
    for (auto& [theta, row] : table) {
        Rational f = Rational(row.at(IntegerPartition::ones(a.n)));
        Rational s = 0;
        for (auto& [lambda, c] : a.coeffs) s += c * Rational(class_size(lambda)) * Rational(row.at(lambda));
        out[theta] = s / f;
    }
    return out;
}

CenterElement product_characters(const CenterElement& a, const CenterElement& b) {
    auto ha = to_idempotent_basis(a), hb = to_idempotent_basis(b);
    CenterElement out(a.n);
    for (auto& [theta, va] : ha) {
        Rational v = va * hb[theta];
        if (v == 0) continue;
        out += CenterElement::idempotent(theta) * v;
    }
    return out;
}

void prune(CenterElement& e) {
    for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
        it = it->second == 0 ? e.coeffs.erase(it) : std::next(it);
}

CenterPoly poly_mul(const CenterPoly& a, const CenterPoly& b, int max_deg, int n) {
    CenterPoly out(max_deg + 1, CenterElement(n));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_deg; ++j) {
            if (a[i].is_zero() || b[j].is_zero()) continue;
            out[i + j] += class_product(a[i], b[j], n <= 8 ? ProductMethod::Convolution : ProductMethod::Characters);
        }
    return out;
}

}  // namespace

int RibbonTableau::sign() const {
    int s = 1;
    for (int h : heights)
        if (h % 2) s = -s;
    return s;
}

std::vector<RibbonTableau> ribbon_tableaux(const IntegerPartition& shape, const IntegerPartition& type) {
    if (shape.size() != type.size()) throw InputError("ribbon_tableaux: size mismatch");
    std::vector<RibbonTableau> out;
    RibbonTableau cur;
    cur.shape = shape;
    cur.layers.push_back(shape);
    std::function<void(const std::vector<int>&, size_t)> rec = [&](const std::vector<int>& s, size_t idx) {
        if (idx == type.parts().size()) {
            if (s.empty()) out.push_back(cur);
            return;
        }
        for (auto& mv : remove_ribbons(s, type.parts()[idx])) {
            cur.layers.emplace_back(mv.rest);
            cur.heights.push_back(mv.height);
            rec(mv.rest, idx + 1);
            cur.layers.pop_back();
            cur.heights.pop_back();
        }
    };
    rec(shape.parts(), 0);
    return out;
}

BigInt mn_character(const IntegerPartition& theta, const IntegerPartition& mu) {
    if (theta.size() != mu.size()) throw InputError("mn_character: |theta| != |mu|");
    return mn_rec(theta.parts(), mu.parts());
}

BigInt dimension(const IntegerPartition& theta) {
    BigInt hooks = 1;
    IntegerPartition conj = theta.conjugate();
    for (int i = 0; i < theta.length(); ++i)
        for (int j = 0; j < theta[i]; ++j) hooks *= (theta[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(theta.size()) / hooks;
}

CenterElement CenterElement::class_sum(const IntegerPartition& lambda) {
    CenterElement e(lambda.size());
    e.coeffs[lambda] = 1;
    return e;
}

CenterElement CenterElement::identity(int n) { return class_sum(IntegerPartition::ones(n)); }

CenterElement CenterElement::idempotent(const IntegerPartition& theta) {
    int n = theta.size();
    const auto& row = char_table(n).at(theta);
    Rational pre = Rational(dimension(theta)) / Rational(factorial(n));
    CenterElement e(n);
    for (auto& [lambda, chi] : row)
        if (chi != 0) e.coeffs[lambda] = pre * Rational(chi);
    return e;
}

Rational CenterElement::operator[](const IntegerPartition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? Rational(0) : it->second;
}

CenterElement& CenterElement::operator+=(const CenterElement& o) {
    if (n != o.n) throw InputError("center element degree mismatch");
    for (auto& [k, v] : o.coeffs) coeffs[k] += v;
    prune(*this);
    return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& o) {
    if (n != o.n) throw InputError("center element degree mismatch");
    for (auto& [k, v] : o.coeffs) coeffs[k] -= v;
    prune(*this);
    return *this;
}

CenterElement CenterElement::operator+(const CenterElement& o) const {
    CenterElement r = *this;
    return r += o;
}

CenterElement CenterElement::operator-(const CenterElement& o) const {
    CenterElement r = *this;
    return r -= o;
}

CenterElement CenterElement::operator*(const Rational& c) const {
    CenterElement r(n);
    if (c == 0) return r;
    for (auto& [k, v] : coeffs) r.coeffs[k] = v * c;
    prune(r);
    return r;
}

bool CenterElement::operator==(const CenterElement& o) const {
    return n == o.n && (*this - o).is_zero();
}

bool CenterElement::is_zero() const {
    for (auto& [k, v] : coeffs)
        if (v != 0) return false;
    return true;
}

CenterElement class_product(const CenterElement& a, const CenterElement& b, ProductMethod method) {
    if (a.n != b.n) throw InputError("class_product: degree mismatch");
    CenterElement r = method == ProductMethod::Convolution ? product_convolution(a, b) : product_characters(a, b);
    prune(r);
    return r;
}

BigInt count_factorizations_char(const std::vector<IntegerPartition>& lambdas, const IntegerPartition& mu) {
    int n = mu.size();
    for (auto& l : lambdas)
        if (l.size() != n) throw InputError("count_factorizations_char: size mismatch");
    int m = static_cast<int>(lambdas.size());
    const auto& table = char_table(n);
    Rational sum = 0;
    for (auto& [theta, row] : table) {
        BigInt f = row.at(IntegerPartition::ones(n));
        if (f == 0) throw InvariantError("zero-dimensional representation");
        Rational term = Rational(row.at(mu));
        for (auto& l : lambdas) term *= Rational(row.at(l));
        // (f^theta)^{1-m}
        if (m >= 1) term /= Rational(ipow(f, m - 1));
        else term *= Rational(f);
        sum += term;
    }
    Rational pre = Rational(ipow(factorial(n), m)) / Rational(z_of(mu));
    for (auto& l : lambdas) pre /= Rational(z_of(l));
    Rational val = pre * sum;
    if (denominator(val) != 1) throw InvariantError("non-integral factorization count");
    return numerator(val);
}

CenterPoly jm_pi(int n) {
    if (n < 1 || n > 8) throw InputError("jm_pi limited to 1 <= n <= 8");
    std::uint64_t total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    std::vector<std::vector<int>> perms(total, std::vector<int>(n));
    for (std::uint64_t r = 0; r < total; ++r) perm_unrank(r, n, perms[r].data());
    // coef[d][rank]
    std::vector<std::vector<long long>> coef(n, std::vector<long long>(total, 0));
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    coef[0][perm_rank(id.data(), n)] = 1;
    std::vector<int> img(n);
    for (int k = 1; k < n; ++k) {  // J_k for label k (0-based), transpositions (i k), i < k
        auto next = coef;
        for (int d = 0; d + 1 < n; ++d)
            for (std::uint64_t r = 0; r < total; ++r) {
                long long c = coef[d][r];
                if (!c) continue;
                for (int i = 0; i < k; ++i) {
                    img = perms[r];
                    for (int& v : img) v = v == i ? k : (v == k ? i : v);
                    next[d + 1][perm_rank(img.data(), n)] += c;
                }
            }
        coef = std::move(next);
    }
    CenterPoly out(n, CenterElement(n));
    for (int d = 0; d < n; ++d) {
        std::map<IntegerPartition, long long> seen;
        for (std::uint64_t r = 0; r < total; ++r) {
            IntegerPartition t = cycle_type_raw(perms[r].data(), n);
            auto it = seen.find(t);
            if (it == seen.end()) seen[t] = coef[d][r];
            else if (it->second != coef[d][r]) throw InvariantError("jm product is not central");
        }
        for (auto& [t, v] : seen)
            if (v) out[d].coeffs[t] = Rational(BigInt(v));
    }
    return out;
}

CenterPoly jm_pi_expected(int n) {
    CenterPoly out(n, CenterElement(n));
    for (auto& l : partitions_of(n)) out[n - l.length()].coeffs[l] = 1;
    return out;
}

std::map<std::vector<IntegerPartition>, BigInt> factorization_histogram_bf(int n, int m) {
    if (n < 1 || m < 1) throw InputError("factorization_histogram_bf needs n, m >= 1");
    const std::uint64_t N = factorial(n).convert_to<std::uint64_t>();
    double total = 1;
    for (int j = 0; j < m; ++j) total *= static_cast<double>(N);
    if (n > 6 || total > 1e7) throw InputError("factorization_histogram_bf limited to (n!)^m <= 10^7");
    std::vector<std::vector<int>> perms(N, std::vector<int>(n));
    auto classes = partitions_of(n);
    std::vector<int> type(N);
    for (std::uint64_t r = 0; r < N; ++r) {
        perm_unrank(r, n, perms[r].data());
        IntegerPartition ct = cycle_type_raw(perms[r].data(), n);
        type[r] = static_cast<int>(std::find(classes.begin(), classes.end(), ct) - classes.begin());
    }
    using Hist = std::map<std::vector<int>, std::uint64_t>;
    // shard on sigma_1
    auto shards = parallel_shards<Hist>(N, [&](std::size_t first) {
        Hist h;
        std::vector<std::uint64_t> choice(m, 0);
        choice[0] = first;
        std::vector<int> prod(n), tmp(n), key(m + 1);
        while (true) {
            std::iota(prod.begin(), prod.end(), 0);
            for (int j = 0; j < m; ++j) {
                const auto& p = perms[choice[j]];
                for (int i = 0; i < n; ++i) tmp[i] = p[prod[i]];
                prod.swap(tmp);
                key[j] = type[choice[j]];
            }
            key[m] = type[perm_rank(prod.data(), n)];
            ++h[key];
            int k = 1;
            while (k < m && ++choice[k] == N) choice[k++] = 0;
            if (k >= m) break;
        }
        return h;
    });
    std::map<std::vector<IntegerPartition>, BigInt> out;
    for (const auto& h : shards)
        for (const auto& [key, c] : h) {
            std::vector<IntegerPartition> k;
            for (int t : key) k.push_back(classes[t]);
            out[k] += c;
        }
    return out;
}

BigInt hurwitz_bf(const IntegerPartition& lambda, int r, bool monotone) {
    int n = lambda.size();
    if (n > 8 || r > 8) throw InputError("hurwitz_bf limited to n, r <= 8");
    std::vector<std::pair<int, int>> trans;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) trans.emplace_back(a, b);
    std::uint64_t count = 0;
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    std::function<void(int, int)> rec = [&](int depth, int min_b) {
        if (depth == r) {
            if (cycle_type_raw(cur.data(), n) == lambda) ++count;
            return;
        }
        for (auto [a, b] : trans) {
            if (monotone && b < min_b) continue;
            for (int& v : cur) v = v == a ? b : (v == b ? a : v);
            rec(depth + 1, b);
            for (int& v : cur) v = v == a ? b : (v == b ? a : v);
        }
    };
    rec(0, 0);
    return BigInt(count);
}

BigInt hurwitz_classical_formula(const IntegerPartition& lambda, int r) {
    int n = lambda.size();
    CenterElement k2(n);
    if (n >= 2) {
        std::vector<int> p(n - 1, 1);
        p[0] = 2;
        k2 = CenterElement::class_sum(IntegerPartition(p));
    }
    CenterElement acc = CenterElement::identity(n);
    for (int i = 0; i < r; ++i)
        acc = class_product(acc, k2, n <= 8 ? ProductMethod::Convolution : ProductMethod::Characters);
    Rational v = acc[lambda] * Rational(class_size(lambda));
    if (denominator(v) != 1) throw InvariantError("non-integral Hurwitz count");
    return numerator(v);
}

BigInt hurwitz_monotone_formula(const IntegerPartition& lambda, int r) {
    int n = lambda.size();
    CenterPoly pi = jm_pi_expected(n);
    // X = 1 - Pi(-t), so Pi(-t)^{-1} = sum_j X^j.
    CenterPoly x(r + 1, CenterElement(n));
    for (int d = 1; d < static_cast<int>(pi.size()) && d <= r; ++d) x[d] = pi[d] * Rational(d % 2 ? 1 : -1);
    CenterPoly inv(r + 1, CenterElement(n));
    inv[0] = CenterElement::identity(n);
    CenterPoly power = inv;
    for (int j = 1; j <= r; ++j) {
        power = poly_mul(power, x, r, n);
        for (int d = 0; d <= r; ++d) inv[d] += power[d];
    }
    Rational v = inv[r][lambda] * Rational(class_size(lambda));
    if (denominator(v) != 1) throw InvariantError("non-integral monotone Hurwitz count");
    return numerator(v);
}

IntegerPartition m_core(const IntegerPartition& theta, int m) {
    std::vector<int> s = theta.parts();
    while (true) {
        auto mv = remove_ribbons(s, m);
        if (mv.empty()) break;
        s = mv.front().rest;
    }
    return IntegerPartition(s);
}

std::optional<MSplit> m_split(const IntegerPartition& theta, int m) {
    if (m < 2) throw InputError("m_split needs m >= 2");
    if (theta.size() % m != 0) return std::nullopt;
    const int L = theta.length();
    const int W = m * (L + 2);
    std::set<int> S;
    for (int j = 1; j <= W; ++j) S.insert(theta[j - 1] - j);
    const int amin = -W / m;
    MSplit out;
    for (int i = 0; i < m; ++i) {
        std::vector<int> Si;
        for (int a = amin; m * a + i <= (L ? theta[0] : 0); ++a)
            if (S.count(m * a + i)) Si.push_back(a);
        int pos = 0, missing = 0;
        for (int a : Si) pos += a >= 0;
        for (int a = amin; a < 0; ++a) missing += !std::binary_search(Si.begin(), Si.end(), a);
        if (pos != missing) return std::nullopt;
        std::sort(Si.rbegin(), Si.rend());
        std::vector<int> parts;
        for (size_t k = 0; k < Si.size(); ++k) {
            int part = Si[k] + static_cast<int>(k) + 1;
            if (part < 0) throw InvariantError("m_split: inconsistent charge");
            if (part > 0) parts.push_back(part);
        }
        out.parts.emplace_back(parts);
    }
    // Sign from one full m-ribbon removal sequence.
    std::vector<int> s = theta.parts();
    int sign = 1;
    while (!s.empty()) {
        auto mv = remove_ribbons(s, m);
        if (mv.empty()) throw InvariantError("m_split: well-charged classes but nonempty m-core");
        if (mv.front().height % 2) sign = -sign;
        s = mv.front().rest;
    }
    out.sign = sign;
    return out;
}

LittlewoodCheck littlewood_factor_check(const IntegerPartition& theta, const IntegerPartition& lambda, int m) {
    if (theta.size() != m * lambda.size()) throw InputError("littlewood: |theta| != m|lambda|");
    LittlewoodCheck res;
    res.lhs = mn_character(theta, lambda.scaled(m));
    auto split = m_split(theta, m);
    res.splittable = split.has_value();
    if (!split) {
        res.rhs = 0;
        res.ok = res.lhs == 0;
        return res;
    }
    // Distribute the parts of lambda among m ordered slots.
    auto mult = lambda.multiplicities();
    std::vector<std::pair<int, int>> groups(mult.begin(), mult.end());
    std::vector<std::vector<int>> slots(m);
    Rational sum = 0;
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            Rational term = 1;
            for (int i = 0; i < m; ++i) {
                IntegerPartition li(slots[i]);
                if (li.size() != split->parts[i].size()) return;
                term *= Rational(mn_character(split->parts[i], li)) / Rational(z_of(li));
            }
            sum += term;
            return;
        }
        auto [value, count] = groups[gi];
        // compositions of count into m parts
        std::vector<int> comp(m, 0);
        std::function<void(int, int)> place = [&](int slot, int left) {
            if (slot == m - 1) {
                comp[slot] = left;
                for (int i = 0; i < m; ++i)
                    for (int c = 0; c < comp[i]; ++c) slots[i].push_back(value);
                rec(gi + 1);
                for (int i = 0; i < m; ++i)
                    for (int c = 0; c < comp[i]; ++c) slots[i].pop_back();
                return;
            }
            for (int c = 0; c <= left; ++c) {
                comp[slot] = c;
                place(slot + 1, left - c);
            }
        };
        place(0, count);
    };
    rec(0);
    res.rhs = Rational(z_of(lambda)) * Rational(split->sign) * sum;
    res.ok = res.rhs == Rational(res.lhs);
    return res;
}

Rational h_poly_eval(const IntegerPartition& theta, const Rational& x) {
    Rational r = 1;
    for (int i = 0; i < theta.length(); ++i)
        for (int j = 0; j < theta[i]; ++j) r *= x + Rational(j - i);
    return r;
}

Rational h_poly_character_side(const IntegerPartition& theta, const Rational& x) {
    int n = theta.size();
    Rational s = 0;
    for (auto& alpha : partitions_of(n)) {
        Rational xp = 1;
        for (int i = 0; i < alpha.length(); ++i) xp *= x;
        s += Rational(mn_character(theta, alpha)) / Rational(z_of(alpha)) * xp;
    }
    return s * Rational(factorial(n)) / Rational(dimension(theta));
}

QuadCoeffs quad_coeffs(int m, const std::vector<int>& k) {
    if (m < 2) throw InputError("quad_coeffs needs m >= 2");
    if (static_cast<int>(k.size()) != m - 1) throw InputError("quad_coeffs: k must have length m-1");
    for (int x : k)
        if (x < 0) throw InputError("quad_coeffs: negative entry");
    QuadCoeffs q;
    for (int j = 1; j <= m; ++j) {
        BigInt e = 1;
        for (int i = 1; i <= m; ++i) {
            if (i == j) continue;
            int slot = ((i - j) % m + m) % m;  // in 1..m-1
            BigInt base = i - j;
            BigInt p = 1;
            for (int t = 0; t < k[slot - 1]; ++t) p *= base;
            e *= p;
        }
        q.e.push_back(e);
    }
    int p = m / 2;
    BigInt s = 0;
    for (int j = 1; j <= p; ++j) s += q.e[j - 1];
    q.d = 2 * s;
    if (m % 2 == 1) q.d += q.e[p];
    if (q.d <= 0 || q.d % m != 0) throw InvariantError("quad_coeffs: d is not a positive multiple of m");
    q.c = q.d / m;
    return q;
}

QuadRelationReport verify_quadrangulation_relation(int m, int g, int n, const std::vector<int>& D, Marking marking) {
    if (m < 2 || g < 0 || n < 1) throw InputError("verify_quadrangulation_relation: bad parameters");
    if (m * n > 12) throw InputError("verify_quadrangulation_relation: mn <= 12 required");
    auto allowed = [&](const IntegerPartition& mu) {
        if (D.empty()) return true;
        for (int part : mu.parts())
            if (std::find(D.begin(), D.end(), part) == D.end()) return false;
        return true;
    };
    QuadRelationReport rep;
    BigInt lhs = 0;
    for (auto& [key, v] : hypermap_histogram(m, n))
        if (key.first == g && allowed(key.second)) lhs += v;
    BigInt hdiv = factorial(n - 1) * ipow(BigInt(m), n - 1);
    if (lhs % hdiv != 0) throw InvariantError("non-integral hypermap count");
    rep.lhs = lhs / hdiv;

    auto hist = constellation_histogram(m, n);
    auto weight = [&](int ell, int k) -> BigInt {
        if (k > ell) return 0;
        BigInt ff = 1;
        for (int i = 0; i < k; ++i) ff *= ell - i;
        return marking == Marking::Ordered ? ff : ff / factorial(k);
    };
    Rational rhs = 0;
    for (int i = 0; i <= g; ++i) {
        BigInt mpow = ipow(BigInt(m), 2 * (g - i));
        std::vector<int> k(m - 1, 0);
        std::function<void(int, int)> rec = [&](int slot, int left) {
            if (slot == m - 2) {
                k[slot] = left;
                BigInt c = quad_coeffs(m, k).c;
                BigInt total = 0;
                for (auto& [key, v] : hist) {
                    if (key.genus != g - i || !allowed(key.phi_type)) continue;
                    BigInt w = v;
                    for (int col = 0; col < m - 1; ++col) w *= weight(key.sigma_cycles[col], k[col]);
                    total += w;
                }
                rhs += Rational(mpow * c) * Rational(total) / Rational(factorial(n - 1));
                return;
            }
            for (int x = 0; x <= left; ++x) {
                k[slot] = x;
                rec(slot + 1, left - x);
            }
        };
        rec(0, 2 * i);
    }
    rep.rhs = rhs;
    rep.ok = rhs == Rational(rep.lhs);
    return rep;
}

}  // namespace mapforge
