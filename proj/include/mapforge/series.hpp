#pragma once

#include "mapforge/symcore.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mapforge {

// Named variables with integer weights. Monomials of total weight above
// order are dropped; cap[i] >= 0 bounds the exponent of variable i.
struct SeriesRing {
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> caps;
    int order = 0;

    int size() const { return static_cast<int>(names.size()); }
    bool operator==(const SeriesRing& o) const {
        return names == o.names && weights == o.weights && caps == o.caps && order == o.order;
    }
    int index(const std::string& name) const;
    bool has(const std::string& name) const;
};
using RingPtr = std::shared_ptr<const SeriesRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, int order,
                  std::vector<int> caps = {});
// t-like variables get weight 1, the rest weight 0.
RingPtr make_ring(const std::vector<std::string>& graded, const std::vector<std::string>& free, int order);
// Names p1..pk.
std::vector<std::string> p_names(int k);

class TruncSeries {
public:
    using Mono = std::vector<int>;

    TruncSeries() = default;
    explicit TruncSeries(RingPtr ring, const Rational& c = 0);
    static TruncSeries var(RingPtr ring, const std::string& name, int power = 1);
    static TruncSeries monomial(RingPtr ring, Mono exps, const Rational& c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Mono& m) const;
    Rational coeff(std::initializer_list<std::pair<const char*, int>> exps) const;
    Rational constant() const;
    int weight(const Mono& m) const;
    // Smallest weight of a nonzero term, -1 for zero.
    int valuation() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    friend TruncSeries operator+(TruncSeries a, const Rational& c);
    friend TruncSeries operator+(const Rational& c, TruncSeries a) { return std::move(a) + c; }
    friend TruncSeries operator-(TruncSeries a, const Rational& c) { return std::move(a) + (-c); }
    friend TruncSeries operator-(const Rational& c, const TruncSeries& a) { return (-a) + c; }
    bool operator==(const TruncSeries& o) const { return terms_ == o.terms_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    TruncSeries pow(int e) const;
    // Requires constant term nonzero and every other term of positive weight.
    TruncSeries inverse() const;
    TruncSeries divide(const TruncSeries& unit) const { return *this * unit.inverse(); }
    // Requires constant term 1.
    TruncSeries log() const;
    TruncSeries derivative(const std::string& name) const;
    TruncSeries map_terms(const std::function<Rational(const Mono&, const Rational&)>& f) const;
    // Drops terms whose monomial fails keep.
    TruncSeries filter(const std::function<bool(const Mono&)>& keep) const;
    TruncSeries set_zero(const std::vector<std::string>& names) const;
    // Coefficient of name^e, as a series without that variable.
    TruncSeries coefficient_of(const std::string& name, int e) const;
    TruncSeries substitute(const std::string& name, const TruncSeries& value) const;
    // Ring homomorphism: variable i goes to images[i], all in one target ring.
    TruncSeries compose(const RingPtr& target, const std::vector<TruncSeries>& images) const;
    // Re-embeds into a ring containing all used variables under the same names.
    TruncSeries to_ring(const RingPtr& target) const;

    std::string to_string() const;
    // Adds c * m, applying the truncation.
    void add_term(const Mono& m, const Rational& c);

private:
    RingPtr ring_;
    std::map<Mono, Rational> terms_;
};

// Compositional inverse in one variable of weight 1: returns g with f(g(v)) = v.
TruncSeries reversion(const TruncSeries& f, const std::string& var);

// Iterates x <- step(x) from start until two successive values agree.
TruncSeries fixed_point(const TruncSeries& start, const std::function<TruncSeries(const TruncSeries&)>& step,
                        int max_iter);

// First monomial where a and b differ, rendered for error reports; empty if equal.
std::string first_difference(const TruncSeries& a, const TruncSeries& b);

}  // namespace mapforge
