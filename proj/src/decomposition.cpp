#include "homcount/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcount {

std::vector<int> PlaneTree::root_path(int v) const {
    std::vector<int> path;
    for (int u = v; u != -1; u = parent.at(u)) {
        if (path.size() > parent.size()) throw std::logic_error("cycle in parent array");
        path.push_back(u);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> PlaneTree::leaves_plane_order() const {
    std::vector<int> leaves;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (children.at(v).empty()) {
            leaves.push_back(v);
        } else {
            for (auto it = children[v].rbegin(); it != children[v].rend(); ++it)
                stack.push_back(*it);
        }
    }
    return leaves;
}

int PlaneTree::height() const {
    int best = 0;
    for (int v = 0; v < static_cast<int>(parent.size()); ++v)
        best = std::max(best, static_cast<int>(root_path(v).size()));
    return best;
}

int PathDecomposition::width() const {
    int largest = 0;
    if (bags.empty()) return -1;
    for (const auto& bag : bags) largest = std::max(largest, static_cast<int>(bag.size()));
    return largest - 1;
}

int RootedForest::height() const {
    const int n = static_cast<int>(parent.size());
    std::vector<int> depth(n, 0);
    int best = 0;
    for (int v = 0; v < n; ++v) {
        if (depth[v]) continue;
        std::vector<int> chain;
        int u = v;
        while (u != -1 && !depth[u]) {
            if (static_cast<int>(chain.size()) > n) throw std::logic_error("cycle in parent array");
            chain.push_back(u);
            u = parent[u];
        }
        int d = (u == -1) ? 0 : depth[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
        best = std::max(best, depth[v]);
    }
    return best;
}

bool RootedForest::is_ancestor(int a, int b) const {
    int steps = 0;
    for (int u = b; u != -1; u = parent.at(u)) {
        if (u == a) return true;
        if (++steps > static_cast<int>(parent.size())) throw std::logic_error("cycle in parent array");
    }
    return false;
}

PlaneTree uncle_tree(const SimpleGraph& g, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("uncle tree requires a connected graph");

    PlaneTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    std::vector<char> visited(n, 0), on_path(n, 0);
    std::vector<int> stack{root};
    visited[root] = on_path[root] = 1;

    while (!stack.empty()) {
        const int v = stack.back();
        int next = -1;
        for (int u : g.neighbours(v)) {
            if (visited[u]) continue;
            bool blocked = false;
            for (int w : g.neighbours(u)) {
                if (w != v && on_path[w]) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                next = u;
                break;
            }
        }
        if (next >= 0) {
            t.children[v].push_back(next);
            t.parent[next] = v;
            visited[next] = on_path[next] = 1;
            stack.push_back(next);
        } else {
            on_path[v] = 0;
            stack.pop_back();
        }
    }

    for (int v = 0; v < n; ++v)
        if (!visited[v]) throw std::logic_error("uncle tree construction failed to span");
    if (!verify_uncle_tree(g, t))
        throw std::logic_error("uncle tree construction produced an invalid tree");
    return t;
}

namespace {

struct EulerIndex {
    std::vector<int> tin, tout;
    bool valid = false;

    bool is_ancestor(int a, int b) const {  // reflexive
        return tin[a] <= tin[b] && tout[b] <= tout[a];
    }
};

// Plane DFS over the tree; detects structural breakage (cycles, vertices not
// reachable from the root, parent/children mismatches).
EulerIndex index_tree(const PlaneTree& t, int n) {
    EulerIndex idx;
    idx.tin.assign(n, -1);
    idx.tout.assign(n, -1);
    if (t.root < 0 || t.root >= n || t.parent[t.root] != -1) return idx;
    int clock = 0, seen = 0;
    std::vector<std::pair<int, int>> stack{{t.root, 0}};
    idx.tin[t.root] = clock++;
    ++seen;
    while (!stack.empty()) {
        auto& [v, child_pos] = stack.back();
        if (child_pos < static_cast<int>(t.children[v].size())) {
            const int c = t.children[v][child_pos++];
            if (c < 0 || c >= n || t.parent[c] != v || idx.tin[c] != -1) return idx;
            idx.tin[c] = clock++;
            ++seen;
            stack.emplace_back(c, 0);
        } else {
            idx.tout[v] = clock++;
            stack.pop_back();
        }
    }
    idx.valid = (seen == n);
    return idx;
}

}  // namespace

bool verify_uncle_tree(const SimpleGraph& g, const PlaneTree& t) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.children.size()) != n)
        throw std::invalid_argument("tree does not span the graph");
    if (n == 0) return false;
    const EulerIndex idx = index_tree(t, n);
    if (!idx.valid) return false;

    // Tree edges exist in g and every root path is induced.
    for (int v = 0; v < n; ++v) {
        const auto path = t.root_path(v);
        for (std::size_t i = 0; i < path.size(); ++i) {
            for (std::size_t j = i + 1; j < path.size(); ++j) {
                const bool consecutive = (j == i + 1);
                if (g.has_edge(path[i], path[j]) != consecutive) return false;
            }
        }
    }

    // sibling_pos[v] = index of v in its parent's children list.
    std::vector<int> sibling_pos(n, 0);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < t.children[v].size(); ++i)
            sibling_pos[t.children[v][i]] = static_cast<int>(i);

    const auto covered = [&](int a, int b) {
        const int p = t.parent[a];
        if (p == -1) return false;
        for (int i = 0; i < sibling_pos[a]; ++i)
            if (idx.is_ancestor(t.children[p][i], b)) return true;
        return false;
    };

    for (const auto& [u, v] : g.edges()) {
        if (t.parent[u] == v || t.parent[v] == u) continue;
        if (!covered(u, v) && !covered(v, u)) return false;
    }
    return true;
}

PathDecomposition path_decomposition_from_uncle_tree(const SimpleGraph& g, const PlaneTree& t) {
    if (!verify_uncle_tree(g, t))
        throw std::invalid_argument("not an uncle tree of the graph");
    PathDecomposition pd;
    for (int leaf : t.leaves_plane_order()) {
        const auto path = t.root_path(leaf);
        std::vector<int> bag = path;
        for (int c : path) {
            const int p = t.parent[c];
            if (p == -1) continue;
            const auto& sibs = t.children[p];
            const auto pos = std::find(sibs.begin(), sibs.end(), c) - sibs.begin();
            for (std::size_t i = pos + 1; i < sibs.size(); ++i) bag.push_back(sibs[i]);
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

bool verify_path_decomposition(const SimpleGraph& g, const PathDecomposition& pd) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(pd.bags.size());
    std::vector<int> first(n, -1), last(n, -1);
    std::vector<char> in_bag(n, 0);
    for (int i = 0; i < k; ++i) {
        for (int v : pd.bags[i]) {
            if (v < 0 || v >= n) return false;
            if (first[v] == -1) first[v] = i;
            last[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (first[v] == -1) return false;

    // Contiguity: v must appear in every bag between its first and last index.
    for (int i = 0; i < k; ++i) {
        for (int v : pd.bags[i]) in_bag[v] = 1;
        for (int v = 0; v < n; ++v)
            if (first[v] <= i && i <= last[v] && !in_bag[v]) return false;
        for (int v : pd.bags[i]) in_bag[v] = 0;
    }

    for (const auto& [u, v] : g.edges()) {
        const bool together = std::max(first[u], first[v]) <= std::min(last[u], last[v]);
        if (!together) return false;
    }
    return true;
}

RootedForest treedepth_forest(const SimpleGraph& g, const PlaneTree& t) {
    if (!verify_uncle_tree(g, t))
        throw std::invalid_argument("not an uncle tree of the graph");
    const int n = g.vertex_count();
    RootedForest f;
    f.parent.assign(n, -1);
    f.roots = {t.root};
    for (int v = 0; v < n; ++v) {
        const auto& cs = t.children[v];
        if (cs.empty()) continue;
        for (std::size_t i = 1; i < cs.size(); ++i) f.parent[cs[i]] = cs[i - 1];
        f.parent[cs[0]] = (v == t.root) ? t.root : t.children[t.parent[v]].back();
    }
    return f;
}

bool width_bound_holds(const SimpleGraph& g, const PathDecomposition& pd, int t) {
    const long long delta = g.max_degree();
    const long long bound = std::max<long long>(0, (delta - 1) * (t - 2) + 1);
    return pd.width() <= bound;
}

bool treedepth_bound_holds(const SimpleGraph& g, const RootedForest& f, int t) {
    const long long delta = g.max_degree();
    const long long bound = std::max<long long>(0, (static_cast<long long>(t) - 2) * (delta - 1) + 1);
    return f.height() - 1 <= bound;
}

namespace {

int component_root(const std::vector<int>& comp, int preferred_root) {
    return std::binary_search(comp.begin(), comp.end(), preferred_root) ? preferred_root
                                                                        : comp.front();
}

}  // namespace

PathDecomposition path_decomposition_components(const SimpleGraph& g, int preferred_root) {
    PathDecomposition pd;
    for (const auto& comp : connected_components(g)) {
        const SimpleGraph sub = induced_subgraph(g, comp);
        const int root = component_root(comp, preferred_root);
        const int local_root =
            static_cast<int>(std::lower_bound(comp.begin(), comp.end(), root) - comp.begin());
        const PlaneTree t = uncle_tree(sub, local_root);
        for (auto& bag : path_decomposition_from_uncle_tree(sub, t).bags) {
            for (int& v : bag) v = comp[v];
            pd.bags.push_back(std::move(bag));
        }
    }
    return pd;
}

RootedForest treedepth_forest_components(const SimpleGraph& g, int preferred_root) {
    RootedForest f;
    f.parent.assign(g.vertex_count(), -1);
    for (const auto& comp : connected_components(g)) {
        const SimpleGraph sub = induced_subgraph(g, comp);
        const int root = component_root(comp, preferred_root);
        const int local_root = static_cast<int>(std::lower_bound(comp.begin(), comp.end(), root) -
                                                comp.begin());
        const PlaneTree t = uncle_tree(sub, local_root);
        const RootedForest local = treedepth_forest(sub, t);
        for (std::size_t i = 0; i < comp.size(); ++i)
            f.parent[comp[i]] = (local.parent[i] == -1) ? -1 : comp[local.parent[i]];
        f.roots.push_back(root);
    }
    return f;
}

}  // namespace homcount
