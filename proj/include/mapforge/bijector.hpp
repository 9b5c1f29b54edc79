#pragma once

#include "mapforge/mapkit.hpp"
#include "mapforge/tamari.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapforge {

// Clockwise successor around a vertex is sigma^{-1}, since sigma lists
// half-edges counter-clockwise.
inline constexpr bool kClockwiseIsSigmaInverse = true;

// Rooted plane tree given by its contour word, with leaf labels in traversal order.
struct DecoratedTree {
    std::string shape;
    std::vector<int> labels;

    struct Node {
        int parent = -1;
        int depth = 0;
        std::vector<int> children;  // traversal order
        int leaf = -1;              // index into labels, -1 for internal nodes
    };
    // Node 0 is the root; node k > 0 comes from the k-th up step of the shape.
    std::vector<Node> nodes() const;
    int edges() const { return static_cast<int>(shape.size()) / 2; }

    bool operator==(const DecoratedTree& o) const { return shape == o.shape && labels == o.labels; }
    bool operator<(const DecoratedTree& o) const {
        return shape < o.shape || (shape == o.shape && labels < o.labels);
    }
};

// Builds a tree from nodes given as child lists; leaves carry labels.
DecoratedTree make_tree(const std::vector<std::vector<int>>& children, const std::vector<int>& node_labels);

// Name of the first violated condition ("C1", "C2", "C3" or "shape"), if any.
std::optional<std::string> tree_violation(const DecoratedTree& t);
bool is_decorated(const DecoratedTree& t);
std::vector<DecoratedTree> decorated_trees(int n_edges);

std::vector<GeneralRotation> nonseparable_planar_maps(int n_edges);

DecoratedTree explore_T(const GeneralRotation& map);
GeneralRotation rebuild_S(const DecoratedTree& t);

std::vector<int> charges(const DecoratedTree& t);
DyckPath lower_P(const DecoratedTree& t);
DyckPath upper_Q(const DecoratedTree& t);
SyncInterval to_interval_PQ(const DecoratedTree& t);
DecoratedTree from_interval_R(const SyncInterval& iv);

// Dual map rooted at sigma(root), then mirrored.
GeneralRotation transported_dual(const GeneralRotation& map);

SyncInterval map_to_interval(const GeneralRotation& map);
GeneralRotation interval_to_map(const SyncInterval& iv);

}  // namespace mapforge
