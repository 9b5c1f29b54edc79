#pragma once

#include "mapforge/symcore.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mapforge {

struct RibbonTableau {
    IntegerPartition shape;
    std::vector<IntegerPartition> layers;  // shape, ..., empty
    std::vector<int> heights;
    int sign() const;
};

// Every way of peeling ribbons of sizes type[0], type[1], ... off shape.
std::vector<RibbonTableau> ribbon_tableaux(const IntegerPartition& shape, const IntegerPartition& type);

BigInt mn_character(const IntegerPartition& theta, const IntegerPartition& mu);
BigInt dimension(const IntegerPartition& theta);  // hook length formula

// Element of the centre of Q[S_n] in the class-sum basis.
struct CenterElement {
    int n = 0;
    std::map<IntegerPartition, Rational> coeffs;

    CenterElement() = default;
    explicit CenterElement(int degree) : n(degree) {}
    static CenterElement class_sum(const IntegerPartition& lambda);
    static CenterElement identity(int n);
    // Central idempotent F_theta.
    static CenterElement idempotent(const IntegerPartition& theta);

    Rational operator[](const IntegerPartition& lambda) const;
    CenterElement& operator+=(const CenterElement& o);
    CenterElement& operator-=(const CenterElement& o);
    CenterElement operator+(const CenterElement& o) const;
    CenterElement operator-(const CenterElement& o) const;
    CenterElement operator*(const Rational& c) const;
    bool operator==(const CenterElement& o) const;
    bool is_zero() const;
};

enum class ProductMethod { Convolution, Characters };

CenterElement class_product(const CenterElement& a, const CenterElement& b,
                            ProductMethod method = ProductMethod::Convolution);

// Number of tuples (sigma_1..sigma_m, phi) with sigma_i of type lambdas[i], phi of
// type mu and sigma_1 ... sigma_m phi = id.
BigInt count_factorizations_char(const std::vector<IntegerPartition>& lambdas, const IntegerPartition& mu);
// Exhaustive search over (sigma_1..sigma_m) in S_n^m, keyed by the types of
// sigma_1..sigma_m and of phi = (sigma_1 ... sigma_m)^{-1}. n <= 6, (n!)^m <= 10^7.
std::map<std::vector<IntegerPartition>, BigInt> factorization_histogram_bf(int n, int m);

// Polynomial in t with central coefficients; entry j is the coefficient of t^j.
using CenterPoly = std::vector<CenterElement>;

// prod_k (id + t J_k), expanded in the group algebra and read back in the class basis.
CenterPoly jm_pi(int n);
// sum_lambda t^{n - l(lambda)} K_lambda
CenterPoly jm_pi_expected(int n);

BigInt hurwitz_bf(const IntegerPartition& lambda, int r, bool monotone);
// |Cl(lambda)| [K_lambda] K_2^r
BigInt hurwitz_classical_formula(const IntegerPartition& lambda, int r);
// |Cl(lambda)| [t^r K_lambda] Pi_n(-t)^{-1}
BigInt hurwitz_monotone_formula(const IntegerPartition& lambda, int r);

struct MSplit {
    std::vector<IntegerPartition> parts;  // indexed by residue class 0..m-1
    int sign = 1;
};

std::optional<MSplit> m_split(const IntegerPartition& theta, int m);
IntegerPartition m_core(const IntegerPartition& theta, int m);

struct LittlewoodCheck {
    BigInt lhs;
    Rational rhs;
    bool splittable = false;
    bool ok = false;
};
LittlewoodCheck littlewood_factor_check(const IntegerPartition& theta, const IntegerPartition& lambda, int m);

// prod over cells (x + content)
Rational h_poly_eval(const IntegerPartition& theta, const Rational& x);
// n! sum_alpha z_alpha^{-1} chi^theta_alpha x^{l(alpha)}
Rational h_poly_character_side(const IntegerPartition& theta, const Rational& x);

struct QuadCoeffs {
    std::vector<BigInt> e;  // e[j-1] for j = 1..m
    BigInt d;
    BigInt c;
};
QuadCoeffs quad_coeffs(int m, const std::vector<int>& k);

enum class Marking { Unordered, Ordered };

struct QuadRelationReport {
    BigInt lhs;
    Rational rhs;
    bool ok = false;
};

// Hyperfaces allowed when every part of the hyperface profile lies in D (empty D = any).
QuadRelationReport verify_quadrangulation_relation(int m, int g, int n, const std::vector<int>& D,
                                                   Marking marking = Marking::Unordered);

}  // namespace mapforge
