#include "mapforge/series.hpp"

#include <algorithm>
#include <sstream>

namespace mapforge {

int SeriesRing::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    throw InputError("unknown series variable: " + name);
}

bool SeriesRing::has(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, int order, std::vector<int> caps) {
    if (names.size() != weights.size()) throw InputError("make_ring: names and weights differ in length");
    if (caps.empty()) caps.assign(names.size(), -1);
    if (caps.size() != names.size()) throw InputError("make_ring: caps length mismatch");
    if (order < 0) throw InputError("make_ring: negative order");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (weights[i] < 0) throw InputError("make_ring: negative weight");
        for (std::size_t j = 0; j < i; ++j)
            if (names[i] == names[j]) throw InputError("make_ring: duplicate variable " + names[i]);
    }
    auto r = std::make_shared<SeriesRing>();
    r->names = std::move(names);
    r->weights = std::move(weights);
    r->caps = std::move(caps);
    r->order = order;
    return r;
}

RingPtr make_ring(const std::vector<std::string>& graded, const std::vector<std::string>& free, int order) {
    std::vector<std::string> names = graded;
    std::vector<int> w(graded.size(), 1);
    for (const auto& f : free) {
        names.push_back(f);
        w.push_back(0);
    }
    return make_ring(std::move(names), std::move(w), order);
}

std::vector<std::string> p_names(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

TruncSeries::TruncSeries(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (!ring_) throw InputError("series needs a ring");
    if (c != 0) terms_[Mono(ring_->size(), 0)] = c;
}

TruncSeries TruncSeries::var(RingPtr ring, const std::string& name, int power) {
    Mono m(ring->size(), 0);
    m[ring->index(name)] = power;
    return monomial(std::move(ring), std::move(m));
}

TruncSeries TruncSeries::monomial(RingPtr ring, Mono exps, const Rational& c) {
    TruncSeries s(std::move(ring));
    if (static_cast<int>(exps.size()) != s.ring_->size()) throw InputError("monomial arity mismatch");
    for (int e : exps)
        if (e < 0) throw InputError("negative exponent");
    s.add_term(exps, c);
    return s;
}

int TruncSeries::weight(const Mono& m) const {
    int w = 0;
    for (int i = 0; i < ring_->size(); ++i) w += m[i] * ring_->weights[i];
    return w;
}

void TruncSeries::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    if (weight(m) > ring_->order) return;
    for (int i = 0; i < ring_->size(); ++i)
        if (ring_->caps[i] >= 0 && m[i] > ring_->caps[i]) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TruncSeries::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::coeff(std::initializer_list<std::pair<const char*, int>> exps) const {
    Mono m(ring_->size(), 0);
    for (const auto& [n, e] : exps) m[ring_->index(n)] = e;
    return coeff(m);
}

Rational TruncSeries::constant() const { return coeff(Mono(ring_->size(), 0)); }

int TruncSeries::valuation() const {
    int v = -1;
    for (const auto& [m, c] : terms_) {
        int w = weight(m);
        if (v < 0 || w < v) v = w;
    }
    return v;
}

static void check_same(const TruncSeries& a, const TruncSeries& b) {
    if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) throw InputError("series live in different rings");
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_same(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_same(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) { return *this = *this * o; }

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TruncSeries operator+(TruncSeries a, const Rational& c) {
    a.add_term(TruncSeries::Mono(a.ring()->size(), 0), c);
    return a;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_same(a, b);
    const SeriesRing& R = *a.ring();
    const int n = R.size();
    std::vector<std::pair<const TruncSeries::Mono*, int>> bt;
    bt.reserve(b.terms_.size());
    for (const auto& [m, c] : b.terms_) bt.emplace_back(&m, b.weight(m));
    TruncSeries out(a.ring());
    TruncSeries::Mono m(n);
    for (const auto& [ma, ca] : a.terms_) {
        int wa = a.weight(ma);
        auto itb = b.terms_.begin();
        for (std::size_t j = 0; j < bt.size(); ++j, ++itb) {
            if (wa + bt[j].second > R.order) continue;
            for (int i = 0; i < n; ++i) m[i] = ma[i] + (*bt[j].first)[i];
            out.add_term(m, ca * itb->second);
        }
    }
    return out;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncSeries result(ring_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

TruncSeries TruncSeries::inverse() const {
    Rational c0 = constant();
    if (c0 == 0) throw InputError("division by a non-unit series");
    TruncSeries rest = *this * (Rational(1) / c0) - Rational(1);
    for (const auto& [m, c] : rest.terms_)
        if (weight(m) == 0) throw InputError("division by a non-unit series (weight-zero terms)");
    // 1/(1+r) = sum (-r)^k
    TruncSeries neg = -rest, acc(ring_, 1), power(ring_, 1);
    for (int k = 1; k <= ring_->order; ++k) {
        power *= neg;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc * (Rational(1) / c0);
}

TruncSeries TruncSeries::log() const {
    if (constant() != 1) throw InputError("log needs constant term 1");
    TruncSeries r = *this - Rational(1);
    for (const auto& [m, c] : r.terms_)
        if (weight(m) == 0) throw InputError("log argument has weight-zero terms");
    TruncSeries acc(ring_), power(ring_, 1);
    for (int k = 1; k <= ring_->order; ++k) {
        power *= r;
        if (power.is_zero()) break;
        acc += power * Rational((k % 2) ? 1 : -1, k);
    }
    return acc;
}

TruncSeries TruncSeries::derivative(const std::string& name) const {
    int v = ring_->index(name);
    TruncSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Mono mm = m;
        --mm[v];
        out.add_term(mm, c * m[v]);
    }
    return out;
}

TruncSeries TruncSeries::map_terms(const std::function<Rational(const Mono&, const Rational&)>& f) const {
    TruncSeries out(ring_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(m, c));
    return out;
}

TruncSeries TruncSeries::filter(const std::function<bool(const Mono&)>& keep) const {
    TruncSeries out(ring_);
    for (const auto& [m, c] : terms_)
        if (keep(m)) out.terms_.emplace(m, c);
    return out;
}

TruncSeries TruncSeries::set_zero(const std::vector<std::string>& names) const {
    std::vector<int> idx;
    for (const auto& n : names)
        if (ring_->has(n)) idx.push_back(ring_->index(n));
    return filter([&](const Mono& m) {
        for (int i : idx)
            if (m[i] != 0) return false;
        return true;
    });
}

TruncSeries TruncSeries::coefficient_of(const std::string& name, int e) const {
    int v = ring_->index(name);
    TruncSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[v] != e) continue;
        Mono mm = m;
        mm[v] = 0;
        out.terms_.emplace(mm, c);
    }
    return out;
}

TruncSeries TruncSeries::substitute(const std::string& name, const TruncSeries& value) const {
    check_same(*this, value);
    int v = ring_->index(name);
    std::vector<TruncSeries> images;
    for (int i = 0; i < ring_->size(); ++i)
        images.push_back(i == v ? value : var(ring_, ring_->names[i]));
    return compose(ring_, images);
}

TruncSeries TruncSeries::compose(const RingPtr& target, const std::vector<TruncSeries>& images) const {
    if (static_cast<int>(images.size()) != ring_->size()) throw InputError("compose: wrong number of images");
    for (const auto& im : images)
        if (im.ring() != target && !(*im.ring() == *target)) throw InputError("compose: image in a different ring");
    std::vector<std::vector<TruncSeries>> powers(images.size());
    auto power_of = [&](int i, int e) -> const TruncSeries& {
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(target, 1);
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    TruncSeries out(target);
    for (const auto& [m, c] : terms_) {
        TruncSeries term(target, c);
        for (int i = 0; i < ring_->size() && !term.is_zero(); ++i)
            if (m[i] > 0) term *= power_of(i, m[i]);
        out += term;
    }
    return out;
}

TruncSeries TruncSeries::to_ring(const RingPtr& target) const {
    std::vector<int> where(ring_->size(), -1);
    for (int i = 0; i < ring_->size(); ++i)
        if (target->has(ring_->names[i])) where[i] = target->index(ring_->names[i]);
    TruncSeries out(target);
    Mono mm(target->size());
    for (const auto& [m, c] : terms_) {
        std::fill(mm.begin(), mm.end(), 0);
        for (int i = 0; i < ring_->size(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] < 0) throw InputError("to_ring: variable " + ring_->names[i] + " missing in target");
            mm[where[i]] = m[i];
        }
        out.add_term(mm, c);
    }
    return out;
}

static std::string mono_string(const SeriesRing& R, const TruncSeries::Mono& m) {
    std::string s;
    for (int i = 0; i < R.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += R.names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string TruncSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& [m, c] : terms_) {
        std::string mono = mono_string(*ring_, m);
        std::string coef = mapforge::to_string(c);
        parts.emplace_back(weight(m), mono == "1" ? coef : (c == 1 ? mono : "(" + coef + ")*" + mono));
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i].second;
    return os.str();
}

TruncSeries reversion(const TruncSeries& f, const std::string& name) {
    const RingPtr& R = f.ring();
    int v = R->index(name);
    if (R->weights[v] != 1) throw InputError("reversion variable must have weight 1");
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < R->size(); ++i)
            if (i != v && m[i] != 0) throw InputError("reversion needs a univariate series");
        if (m[v] == 0) throw InputError("reversion needs valuation 1");
    }
    TruncSeries::Mono m1(R->size(), 0);
    m1[v] = 1;
    Rational a1 = f.coeff(m1);
    if (a1 == 0) throw InputError("reversion needs valuation 1");
    TruncSeries x = TruncSeries::var(R, name);
    TruncSeries higher = f - x * a1;
    return fixed_point(x * (1 / a1), [&](const TruncSeries& g) {
        return (x - higher.substitute(name, g)) * (1 / a1);
    }, R->order + 2);
}

TruncSeries fixed_point(const TruncSeries& start, const std::function<TruncSeries(const TruncSeries&)>& step,
                        int max_iter) {
    TruncSeries cur = start;
    for (int i = 0; i < max_iter; ++i) {
        TruncSeries next = step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw InvariantError("fixed-point iteration did not stabilise within the order bound");
}

std::string first_difference(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries d = a - b;
    if (d.is_zero()) return {};
    const auto& [m, c] = *std::min_element(d.terms().begin(), d.terms().end(), [&](const auto& x, const auto& y) {
        return d.weight(x.first) < d.weight(y.first) || (d.weight(x.first) == d.weight(y.first) && x.first < y.first);
    });
    return "at " + mono_string(*a.ring(), m) + ": left " + to_string(a.coeff(m)) + ", right " + to_string(b.coeff(m));
}

}  // namespace mapforge
