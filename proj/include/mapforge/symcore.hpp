#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapforge {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// Raised on malformed input at an API boundary.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal consistency check fails.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

BigInt factorial(int n);
BigInt binomial(long n, long k);
BigInt ipow(const BigInt& b, unsigned e);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Permutation of {1..n}. Stored 0-based; every public accessor is 1-based.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    static Permutation from_images(const std::vector<int>& images_1based);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles_1based);
    static Permutation from_zero_based(std::vector<int> img);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i - 1) + 1; }
    std::vector<int> images() const;
    const std::vector<int>& raw() const { return img_; }

    std::vector<std::vector<int>> cycles() const;
    int num_cycles() const;
    bool is_identity() const;
    bool is_fixed_point_free_involution() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

// result(i) = q(p(i))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);
    static IntegerPartition parse(const std::string& s);
    static IntegerPartition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }
    std::map<int, int> multiplicities() const;
    IntegerPartition scaled(int m) const;
    IntegerPartition conjugate() const;
    std::string str() const;

    bool operator==(const IntegerPartition& o) const { return parts_ == o.parts_; }
    bool operator!=(const IntegerPartition& o) const { return parts_ != o.parts_; }
    bool operator<(const IntegerPartition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

IntegerPartition cycle_type(const Permutation& p);
IntegerPartition cycle_type_raw(const int* img, int n);
BigInt z_of(const IntegerPartition& lambda);
BigInt class_size(const IntegerPartition& lambda);
std::vector<IntegerPartition> partitions_of(int n);
// Representative permutation of the class: consecutive cycles (1..l1)(l1+1..) ...
Permutation class_representative(const IntegerPartition& lambda);

// Lexicographic rank of a permutation of {0..n-1} and its inverse.
std::uint64_t perm_rank(const int* img, int n);
void perm_unrank(std::uint64_t r, int n, int* img);

}  // namespace mapforge
