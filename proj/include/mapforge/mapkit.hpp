#pragma once

#include "mapforge/symcore.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mapforge {

// General map on 2n half-edges. sigma = compose(rho, phi) gives the vertices,
// listed counter-clockwise. Label 1 is the root half-edge.
struct GeneralRotation {
    Permutation phi;
    Permutation rho;

    GeneralRotation() = default;
    GeneralRotation(Permutation phi_, Permutation rho_);
    static GeneralRotation from_sigma_rho(const Permutation& sigma, const Permutation& rho);

    int half_edges() const { return phi.degree(); }
    int edges() const { return phi.degree() / 2; }
    Permutation sigma() const { return compose(rho, phi); }
    bool operator==(const GeneralRotation& o) const { return phi == o.phi && rho == o.rho; }
};

struct BipartiteRotation {
    Permutation sigma_black;
    Permutation sigma_white;
    Permutation phi;
    BipartiteRotation() = default;
    BipartiteRotation(Permutation b, Permutation w, Permutation f);
    int edges() const { return phi.degree(); }
};

struct ConstellationRotation {
    int m = 0;
    std::vector<Permutation> sigmas;
    Permutation phi;
    ConstellationRotation() = default;
    ConstellationRotation(std::vector<Permutation> s, Permutation f);
    int hyperedges() const { return phi.degree(); }
};

struct HypermapRotation {
    int m = 0;
    int n = 0;
    Permutation sigma_circ;
    Permutation phi;
    HypermapRotation() = default;
    HypermapRotation(int m_, Permutation circ, Permutation f);
    static Permutation bullet(int m, int n);
    Permutation sigma_bullet() const { return bullet(m, n); }
};

bool is_transitive(const GeneralRotation& rs);
bool is_transitive(const BipartiteRotation& rs);
bool is_transitive(const ConstellationRotation& rs);
bool is_transitive(const HypermapRotation& rs);

int genus(const GeneralRotation& rs);
int genus(const BipartiteRotation& rs);
int genus(const ConstellationRotation& rs);
int genus(const HypermapRotation& rs);

// Faces become vertices and vertices become faces; the rho pairing is kept.
GeneralRotation dual(const GeneralRotation& rs);

// Relabeling by breadth-first search from the root along sigma then rho.
// Two rooted maps are isomorphic iff their canonical forms are equal.
GeneralRotation canonical_form(const GeneralRotation& rs);
bool root_equivalent(const GeneralRotation& a, const GeneralRotation& b);

struct Multigraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // endpoints, 0-based vertex ids
    std::vector<int> vertex_of;              // half-edge (0-based) -> vertex id
    std::vector<int> edge_of;                // half-edge (0-based) -> edge id
};

// Vertex ids follow the smallest label in each sigma cycle, edge ids the
// smallest label in each rho pair.
Multigraph underlying_graph(const GeneralRotation& rs);
bool is_nonseparable(const GeneralRotation& rs);
bool is_bridge(const GeneralRotation& rs, int edge);
bool has_loop(const GeneralRotation& rs);
bool has_multi_edge(const GeneralRotation& rs);
bool is_connected_after_removal(const Multigraph& g, const std::vector<int>& removed_vertices,
                                const std::vector<int>& removed_edges);

struct MapFilter {
    std::optional<int> genus;
    std::optional<IntegerPartition> faces;     // cycle type of phi
    std::optional<IntegerPartition> vertices;  // cycle type of sigma
    bool loopless = false;
    bool simple = false;
};

BigInt count_rooted_maps(int n_edges, const MapFilter& filter = {});
std::map<int, BigInt> count_rooted_maps_by_genus(int n_edges);
// Transitive (phi, rho) pairs over all of S_{2n} x involutions, no shortcuts.
BigInt count_transitive_pairs(int n_edges);
// Distinct rooted maps in canonical form, sorted.
std::vector<GeneralRotation> enumerate_rooted_maps(int n_edges, const MapFilter& filter = {});

BigInt count_rooted_bipartite(int n, std::optional<int> genus = {},
                              std::optional<IntegerPartition> faces = {});
BigInt count_rooted_constellations(int m, int n, std::optional<int> genus = {},
                                   std::optional<IntegerPartition> hyperfaces = {});
BigInt count_rooted_hypermaps(int m, int n, std::optional<int> genus = {},
                              std::optional<IntegerPartition> hyperfaces = {});

// Labeled transitive constellations grouped by statistics. phi_type is the
// hyperface profile, sigma_cycles the vertex count of each color, root_len
// the length of the phi cycle through label 1.
struct ConstellationKey {
    int genus;
    IntegerPartition phi_type;
    std::vector<int> sigma_cycles;
    int root_len;
    bool operator<(const ConstellationKey& o) const;
};
std::map<ConstellationKey, BigInt> constellation_histogram(int m, int n);

// Labeled transitive hypermaps grouped by (genus, mu) where sigma_circ has type m*mu.
std::map<std::pair<int, IntegerPartition>, BigInt> hypermap_histogram(int m, int n);

}  // namespace mapforge
