#pragma once

#include <vector>

#include "homcount/graph.hpp"

namespace homcount {

/// Rooted spanning tree with ordered children lists (elder siblings first).
struct PlaneTree {
    int root = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // elder first

    /// Vertices of the tree path root..v.
    std::vector<int> root_path(int v) const;
    /// Leaves in left-to-right order under the children orderings.
    std::vector<int> leaves_plane_order() const;
    /// Vertices on the longest root path.
    int height() const;
};

struct PathDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted ascending

    /// max bag size - 1; -1 for an empty sequence.
    int width() const;
};

struct RootedForest {
    std::vector<int> roots;
    std::vector<int> parent;  // -1 at roots

    /// Vertices on the longest root-to-leaf path; 0 when empty.
    int height() const;
    /// Reflexive ancestor test along parent pointers.
    bool is_ancestor(int a, int b) const;
};

/// Spanning tree of a connected graph in which every root path is induced and
/// every non-tree edge uv has, on one side, an elder sibling lying on the
/// other endpoint's root path. Deterministic: the DFS always pushes the
/// smallest eligible neighbour. The result is validated before returning;
/// a validation failure raises std::logic_error.
PlaneTree uncle_tree(const SimpleGraph& g, int root);

/// Checks the two uncle-tree properties (induced root paths, elder-sibling
/// cover of non-tree edges). The sibling may be the other endpoint itself.
bool verify_uncle_tree(const SimpleGraph& g, const PlaneTree& t);

/// One bag per leaf p, in plane order: the root path of p plus every vertex
/// with an elder sibling on that path.
PathDecomposition path_decomposition_from_uncle_tree(const SimpleGraph& g, const PlaneTree& t);

/// Vertex cover, edge cover and contiguity of every vertex's bag interval.
bool verify_path_decomposition(const SimpleGraph& g, const PathDecomposition& pd);

/// Forest in which every graph edge joins an ancestor-descendant pair: each
/// vertex's children become a path (elder first), child paths hang below the
/// end of their parent's path, and the tree root sits above its first child.
RootedForest treedepth_forest(const SimpleGraph& g, const PlaneTree& t);

/// width(pd) <= max(0, (max_degree-1)(t-2)+1); the clamp keeps the check
/// total for degenerate degrees.
bool width_bound_holds(const SimpleGraph& g, const PathDecomposition& pd, int t);

/// Root-to-leaf edge count of f is at most max(0, (t-2)(max_degree-1)+1).
/// Depth is measured in edges here; height() counts vertices, one more.
bool treedepth_bound_holds(const SimpleGraph& g, const RootedForest& f, int t);

/// Per-component decompositions concatenated into one bag sequence. The
/// component containing preferred_root is rooted there, others at their
/// smallest vertex.
PathDecomposition path_decomposition_components(const SimpleGraph& g, int preferred_root = 0);

/// Per-component tree-depth forests merged into one forest.
RootedForest treedepth_forest_components(const SimpleGraph& g, int preferred_root = 0);

}  // namespace homcount
