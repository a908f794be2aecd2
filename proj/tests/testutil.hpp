#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "homcount/instance.hpp"
#include "homcount/polynomial.hpp"

namespace homcount::testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool rand_bool(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return SimpleGraph(n, edges);
}

inline SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    return SimpleGraph(n, edges);
}

inline SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

inline SimpleGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return SimpleGraph(leaves + 1, edges);
}

inline SimpleGraph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_bool(rng, p)) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

// Random spanning tree plus extra edges, then a label shuffle.
inline SimpleGraph random_connected_graph(Rng& rng, int n, double extra_p) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        const int u = rand_int(rng, 0, v - 1);
        edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    }
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (auto& [u, v] : edges) present[u][v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && rand_bool(rng, extra_p)) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

// Random multigraph-free target: simple edges and loops, at most one edge
// per unordered pair.
inline TargetGraph random_target(Rng& rng, int max_colours) {
    const int k = rand_int(rng, 1, max_colours);
    static const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
    std::vector<std::string> names(pool.begin(), pool.begin() + k);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a) {
        if (rand_bool(rng, 0.4)) edges.emplace_back(a, a);
        for (int b = a + 1; b < k; ++b)
            if (rand_bool(rng, 0.55)) edges.emplace_back(a, b);
    }
    return TargetGraph(std::move(names), edges);
}

inline std::vector<int> random_list(Rng& rng, int colour_count, double keep_p) {
    std::vector<int> list;
    for (int c = 0; c < colour_count; ++c)
        if (rand_bool(rng, keep_p)) list.push_back(c);
    return list;
}

inline Rational random_positive_rational(Rng& rng) {
    return Rational(rand_int(rng, 1, 5), rand_int(rng, 1, 4));
}

struct RandomInstance {
    Instance instance;
    TargetGraph target;
};

// Random graph, lists (occasionally empty or singleton) and sparse weights.
inline RandomInstance random_instance(Rng& rng, int max_n, int max_colours) {
    RandomInstance out;
    out.target = random_target(rng, max_colours);
    const int n = rand_int(rng, 1, max_n);
    const double density = 0.15 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
    out.instance.graph = random_graph(rng, n, density);
    const double keep_p = 0.35 + 0.55 * std::uniform_real_distribution<double>(0, 1)(rng);
    for (int v = 0; v < n; ++v)
        out.instance.lists.lists.push_back(random_list(rng, out.target.colour_count(), keep_p));
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < out.target.colour_count(); ++c)
            if (rand_bool(rng, 0.25)) out.instance.weights.set(v, c, random_positive_rational(rng));
    return out;
}

// Independence polynomial by direct subset enumeration, as coefficients of a
// two-variable polynomial over the {in, out} target (exponent slot 0 = in).
inline Polynomial independence_polynomial_by_enumeration(const SimpleGraph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    std::vector<long long> by_size(n + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& [u, v] : edges) {
            if ((mask >> u & 1) && (mask >> v & 1)) {
                independent = false;
                break;
            }
        }
        if (independent) ++by_size[std::popcount(mask)];
    }
    Polynomial p(2);
    for (int d = 0; d <= n; ++d)
        if (by_size[d] != 0) p.add_term({d, 0}, by_size[d]);
    return p;
}

}  // namespace homcount::testutil
