#include "mapforge/symcore.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mapforge {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

std::string to_string(const BigInt& x) { return x.str(); }
std::string to_string(const Rational& x) { return x.str(); }

Permutation Permutation::identity(int n) {
    if (n < 0) throw InputError("negative degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return from_zero_based(std::move(img));
}

Permutation Permutation::from_zero_based(std::vector<int> img) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
            throw InputError("images do not form a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    std::vector<int> img(images.size());
    for (size_t i = 0; i < images.size(); ++i) img[i] = images[i] - 1;
    return from_zero_based(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen(n, 0);
    for (const auto& c : cycles) {
        for (size_t j = 0; j < c.size(); ++j) {
            int a = c[j] - 1, b = c[(j + 1) % c.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n || seen[a]) throw InputError("bad cycle notation");
            seen[a] = 1;
            img[a] = b;
        }
    }
    return from_zero_based(std::move(img));
}

std::vector<int> Permutation::images() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
    return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = static_cast<int>(i); !seen[j]; j = img_[j]) {
            seen[j] = 1;
            c.push_back(j + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::num_cycles() const {
    int n = degree(), c = 0;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return c;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_fixed_point_free_involution() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] == static_cast<int>(i) || img_[img_[i]] != static_cast<int>(i)) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InputError("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = q.raw()[p.raw()[i]];
    return Permutation::from_zero_based(std::move(img));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[p.raw()[i]] = i;
    return Permutation::from_zero_based(std::move(img));
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x <= 0) throw InputError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw InputError("bad partition '" + s + "'");
        }
        if (pos != tok.size()) throw InputError("bad partition '" + s + "'");
        parts.push_back(v);
    }
    return IntegerPartition(std::move(parts));
}

IntegerPartition IntegerPartition::ones(int n) { return IntegerPartition(std::vector<int>(n, 1)); }

std::map<int, int> IntegerPartition::multiplicities() const {
    std::map<int, int> m;
    for (int x : parts_) ++m[x];
    return m;
}

IntegerPartition IntegerPartition::scaled(int m) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= m;
    return IntegerPartition(std::move(p));
}

IntegerPartition IntegerPartition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (empty() ? 0 : parts_[0]); ++j) {
        int cnt = 0;
        for (int x : parts_) cnt += x >= j;
        c.push_back(cnt);
    }
    return IntegerPartition(std::move(c));
}

std::string IntegerPartition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

IntegerPartition cycle_type_raw(const int* img, int n) {
    std::vector<int> lens;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int l = 0;
        for (int j = i; !seen[j]; j = img[j]) seen[j] = 1, ++l;
        lens.push_back(l);
    }
    return IntegerPartition(std::move(lens));
}

IntegerPartition cycle_type(const Permutation& p) { return cycle_type_raw(p.raw().data(), p.degree()); }

BigInt z_of(const IntegerPartition& lambda) {
    BigInt z = 1;
    for (auto [part, mult] : lambda.multiplicities()) z *= ipow(BigInt(part), mult) * factorial(mult);
    return z;
}

BigInt class_size(const IntegerPartition& lambda) { return factorial(lambda.size()) / z_of(lambda); }

std::vector<IntegerPartition> partitions_of(int n) {
    if (n < 0) throw InputError("negative size");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Permutation class_representative(const IntegerPartition& lambda) {
    std::vector<int> img(lambda.size());
    int start = 0;
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) img[start + j] = start + (j + 1) % part;
        start += part;
    }
    return Permutation::from_zero_based(std::move(img));
}

std::uint64_t perm_rank(const int* img, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += img[j] < img[i];
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

void perm_unrank(std::uint64_t r, int n, int* img) {
    std::vector<int> digits(n), avail(n);
    for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(r % static_cast<std::uint64_t>(n - i));
        r /= static_cast<std::uint64_t>(n - i);
    }
    std::iota(avail.begin(), avail.end(), 0);
    for (int i = 0; i < n; ++i) {
        img[i] = avail[digits[i]];
        avail.erase(avail.begin() + digits[i]);
    }
}

}  // namespace mapforge
