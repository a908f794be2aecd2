#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcount {

/// Loopless undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    /// Throws std::invalid_argument on loops, parallel edges or ids out of range.
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    /// All edges as pairs (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Colour graph: loops allowed, at most one edge per unordered pair.
class TargetGraph {
public:
    TargetGraph() = default;
    TargetGraph(std::vector<std::string> colour_names,
                const std::vector<std::pair<int, int>>& edges);

    int colour_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int h) const;
    int index_of(const std::string& name) const;  // -1 when unknown
    /// Neighbourhood of h; contains h itself exactly when h carries a loop.
    const std::vector<int>& neighbours(int h) const;
    bool has_edge(int a, int b) const;
    bool has_loop(int h) const { return has_edge(h, h); }
    int edge_count() const;

    /// Complete loopless graph on colours named "1".."k".
    static TargetGraph complete(int k);
    /// Two colours {in, out} with the edge in-out and a loop at out; maps
    /// picking "in" on an independent set are exactly the homomorphisms.
    static TargetGraph independent_set_target();

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
};

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

/// Induced subgraph on keep_sorted; vertex i of the result is keep_sorted[i].
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep_sorted);

/// True iff every pair of distinct colours shares at most one common neighbour.
/// For loopless targets this is equivalent to having no 4-cycle subgraph.
bool check_common_neighbourhood_condition(const TargetGraph& h);

struct CommonNeighbourhoodViolation {
    int a = -1;
    int b = -1;
    std::vector<int> shared;
};

/// First violating pair in id order, with the shared neighbours; nullopt if none.
std::optional<CommonNeighbourhoodViolation> common_neighbourhood_violation(const TargetGraph& h);

/// min(cap, largest t such that the t-vertex path is an induced subgraph).
/// Exhaustive search with pruning; diagnostic use only, never on a solve path.
int longest_induced_path_order(const SimpleGraph& g, int cap);

}  // namespace homcount
