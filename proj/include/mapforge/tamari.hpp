#pragma once

#include "mapforge/symcore.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mapforge {

// Word over {u, d}; every prefix has at least as many u as d.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::string word);

    const std::string& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()) / 2; }
    // Points on the x-axis, both endpoints included.
    int contacts() const;
    std::vector<int> heights() const;

    bool operator==(const DyckPath& o) const { return word_ == o.word_; }
    bool operator<(const DyckPath& o) const { return word_ < o.word_; }

private:
    std::string word_;
};

// Word over {N, E}.
class GridPath {
public:
    GridPath() = default;
    explicit GridPath(std::string word);

    const std::string& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int norths() const;
    int easts() const;
    // Read right to left with N and E exchanged.
    GridPath reversed_swapped() const;

    bool operator==(const GridPath& o) const { return word_ == o.word_; }
    bool operator<(const GridPath& o) const { return word_ < o.word_; }

private:
    std::string word_;
};

std::vector<DyckPath> dyck_paths(int n);
std::vector<GridPath> grid_words(int length);

std::vector<int> distance_function(const DyckPath& p);
bool tamari_leq(const DyckPath& p, const DyckPath& q);
std::vector<DyckPath> covers(const DyckPath& p);
GridPath type_of(const DyckPath& p);

// Grid paths with the endpoints of v staying weakly above it.
std::vector<GridPath> paths_above(const GridPath& v);
// Valley-swap covers of path inside the set of paths above v.
std::vector<GridPath> grid_covers(const GridPath& path, const GridPath& v);

// Finite poset given by its covering relation, with the order closure cached.
struct Lattice {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> up;  // covers
    std::vector<std::vector<char>> leq;

    int size() const { return static_cast<int>(elements.size()); }
    BigInt interval_count() const;
    Lattice dual() const;
    int index_of(const std::string& e) const;
};

// Builds leq from the covering lists.
void close_order(Lattice& l);

Lattice tamari_lattice(int n);
Lattice nu_tamari(const GridPath& v);
// Dyck paths of size |v|+1 with type v, ordered as in the Tamari lattice.
Lattice type_class_interval(const GridPath& v);
Lattice m_tamari(int m, int n);

// f[i] is the image of element i of a, preserving the covering relation.
std::optional<std::vector<int>> lattice_isomorphism(const Lattice& a, const Lattice& b);
bool lattices_isomorphic(const Lattice& a, const Lattice& b);

struct SyncInterval {
    DyckPath lower;
    DyckPath upper;
    bool operator==(const SyncInterval& o) const { return lower == o.lower && upper == o.upper; }
    bool operator<(const SyncInterval& o) const {
        return lower < o.lower || (lower == o.lower && upper < o.upper);
    }
};

bool is_sync_interval(const DyckPath& lower, const DyckPath& upper);
// All pairs of same-type paths filtered by the order.
std::vector<SyncInterval> sync_intervals(int n);
// Built from smaller ones by P = u P1l d P1r P2, Q = u Q1 d Q2.
std::vector<SyncInterval> sync_intervals_recursive(int n);
// [t^n] of F = x t (1 + F)(1 + (F - F(1)) / (x - 1)), entry k is the coefficient of x^k.
std::vector<std::vector<BigInt>> sync_series(int nmax);

BigInt tamari_interval_count(int n);
BigInt tamari_interval_formula(int n);    // 2 (4n+1)! / ((n+1)! (3n+2)!)
BigInt sync_interval_formula(int n);      // 2 (3n)! / ((n+1)! (2n+1)!)
BigInt m_tamari_interval_formula(int m, int n);

// The order-reversing bijection of the Tamari lattice of order n, as a word map.
std::map<std::string, std::string> tamari_antiautomorphism(int n);
// [P, Q] -> [f(Q), f(P)] with f the anti-automorphism; sends type v to its reverse-swap.
SyncInterval dual_interval(const SyncInterval& iv);

}  // namespace mapforge
