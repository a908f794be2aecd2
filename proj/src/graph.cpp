#include "homcount/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcount {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("parallel edges are not allowed");
    }
}

int SimpleGraph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += static_cast<int>(row.size());
    return twice / 2;
}

const std::vector<int>& SimpleGraph::neighbours(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    return adj_[v];
}

int SimpleGraph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
    return d;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

TargetGraph::TargetGraph(std::vector<std::string> colour_names,
                         const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(colour_names)), adj_(names_.size()) {
    const int k = colour_count();
    for (int i = 0; i < k; ++i) {
        if (names_[i].empty()) throw std::invalid_argument("empty colour name");
        for (int j = i + 1; j < k; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate colour name: '" + names_[i] + "'");
    }
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= k || b >= k)
            throw std::invalid_argument("colour id out of range");
        if (a == b) {
            adj_[a].push_back(a);
        } else {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("parallel edges are not allowed in the target");
    }
}

const std::string& TargetGraph::name(int h) const {
    if (h < 0 || h >= colour_count()) throw std::out_of_range("colour id out of range");
    return names_[h];
}

int TargetGraph::index_of(const std::string& name) const {
    for (int i = 0; i < colour_count(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

const std::vector<int>& TargetGraph::neighbours(int h) const {
    if (h < 0 || h >= colour_count()) throw std::out_of_range("colour id out of range");
    return adj_[h];
}

bool TargetGraph::has_edge(int a, int b) const {
    const auto& row = neighbours(a);
    if (b < 0 || b >= colour_count()) throw std::out_of_range("colour id out of range");
    return std::binary_search(row.begin(), row.end(), b);
}

int TargetGraph::edge_count() const {
    int total = 0;
    for (int h = 0; h < colour_count(); ++h) {
        total += static_cast<int>(adj_[h].size());
        if (has_loop(h)) ++total;  // loops appear once in their own row
    }
    return total / 2;
}

TargetGraph TargetGraph::complete(int k) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) names.push_back(std::to_string(i + 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return TargetGraph(std::move(names), edges);
}

TargetGraph TargetGraph::independent_set_target() {
    return TargetGraph({"in", "out"}, {{0, 1}, {1, 1}});
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (int u : g.neighbours(comp[head])) {
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep_sorted) {
    const int n = g.vertex_count();
    std::vector<int> old_to_new(n, -1);
    for (std::size_t i = 0; i < keep_sorted.size(); ++i) {
        const int v = keep_sorted[i];
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        if (i > 0 && keep_sorted[i - 1] >= v)
            throw std::invalid_argument("kept vertices must be sorted and distinct");
        old_to_new[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep_sorted)
        for (int v : g.neighbours(u))
            if (u < v && old_to_new[v] >= 0)
                edges.emplace_back(old_to_new[u], old_to_new[v]);
    return SimpleGraph(static_cast<int>(keep_sorted.size()), edges);
}

std::optional<CommonNeighbourhoodViolation> common_neighbourhood_violation(const TargetGraph& h) {
    const int k = h.colour_count();
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::vector<int> shared;
            std::set_intersection(h.neighbours(a).begin(), h.neighbours(a).end(),
                                  h.neighbours(b).begin(), h.neighbours(b).end(),
                                  std::back_inserter(shared));
            if (shared.size() > 1) return CommonNeighbourhoodViolation{a, b, std::move(shared)};
        }
    }
    return std::nullopt;
}

bool check_common_neighbourhood_condition(const TargetGraph& h) {
    return !common_neighbourhood_violation(h).has_value();
}

namespace {

// Extends the induced path ending at `last`; aborts once `cap` is reached.
bool extend_induced_path(const SimpleGraph& g, std::vector<int>& path, std::vector<char>& in_path,
                         int cap, int& best) {
    best = std::max(best, static_cast<int>(path.size()));
    if (best >= cap) return true;
    const int last = path.back();
    for (int u : g.neighbours(last)) {
        if (in_path[u]) continue;
        bool chord = false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (g.has_edge(u, path[i])) {
                chord = true;
                break;
            }
        }
        if (chord) continue;
        path.push_back(u);
        in_path[u] = 1;
        const bool done = extend_induced_path(g, path, in_path, cap, best);
        in_path[u] = 0;
        path.pop_back();
        if (done) return true;
    }
    return false;
}

}  // namespace

int longest_induced_path_order(const SimpleGraph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int best = 1;
    std::vector<int> path;
    std::vector<char> in_path(n, 0);
    for (int s = 0; s < n && best < cap; ++s) {
        path.assign(1, s);
        in_path.assign(n, 0);
        in_path[s] = 1;
        if (extend_induced_path(g, path, in_path, cap, best)) break;
    }
    return std::min(best, cap);
}

}  // namespace homcount
