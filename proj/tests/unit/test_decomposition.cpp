#include <doctest.h>

#include "homcount/decomposition.hpp"

#include "../testutil.hpp"

using namespace homcount;
namespace tu = homcount::testutil;

TEST_CASE("uncle tree of a star equals the star") {
    const SimpleGraph star = tu::star_graph(3);
    const PlaneTree t = uncle_tree(star, 0);
    CHECK(t.root == 0);
    CHECK(t.children[0] == std::vector<int>{1, 2, 3});
    CHECK(t.parent == std::vector<int>{-1, 0, 0, 0});
    CHECK(verify_uncle_tree(star, t));
}

TEST_CASE("uncle tree of a triangle") {
    const SimpleGraph k3 = tu::complete_graph(3);
    const PlaneTree t = uncle_tree(k3, 0);
    // The path 0-1-2 is not induced, so 2 becomes a younger child of the root
    // and the non-tree edge 1-2 is covered by 2's elder sibling 1.
    CHECK(t.parent == std::vector<int>{-1, 0, 0});
    CHECK(t.children[0] == std::vector<int>{1, 2});
    CHECK(verify_uncle_tree(k3, t));
}

TEST_CASE("uncle tree of a four-cycle matches the deterministic trace") {
    const SimpleGraph c4 = tu::cycle_graph(4);
    const PlaneTree t = uncle_tree(c4, 0);
    CHECK(t.parent == std::vector<int>{-1, 0, 1, 0});
    CHECK(t.children[0] == std::vector<int>{1, 3});
    CHECK(t.children[1] == std::vector<int>{2});
    CHECK(verify_uncle_tree(c4, t));
}

TEST_CASE("uncle tree requires a connected graph") {
    CHECK_THROWS_AS(uncle_tree(SimpleGraph(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(uncle_tree(tu::path_graph(3), 5), std::invalid_argument);
}

TEST_CASE("verify_uncle_tree rejects trees violating either property") {
    // Spanning tree of a tree graph: nothing to check beyond the tree edges.
    const SimpleGraph path = tu::path_graph(3);
    PlaneTree chain;
    chain.root = 0;
    chain.parent = {-1, 0, 1};
    chain.children = {{1}, {2}, {}};
    CHECK(verify_uncle_tree(path, chain));

    // Same shape on a triangle: the root path 0-1-2 has the chord 0-2.
    CHECK_FALSE(verify_uncle_tree(tu::complete_graph(3), chain));

    // Four-cycle with the sibling order flipped: edge 2-3 loses its cover.
    PlaneTree flipped;
    flipped.root = 0;
    flipped.parent = {-1, 0, 1, 0};
    flipped.children = {{3, 1}, {2}, {}, {}};
    CHECK_FALSE(verify_uncle_tree(tu::cycle_graph(4), flipped));

    // Tree edge missing from the graph.
    PlaneTree not_subgraph;
    not_subgraph.root = 0;
    not_subgraph.parent = {-1, 0, 0};
    not_subgraph.children = {{1, 2}, {}, {}};
    CHECK_FALSE(verify_uncle_tree(tu::path_graph(3), not_subgraph));
}

TEST_CASE("bags from uncle trees") {
    // Single vertex: one leaf, one bag.
    const SimpleGraph k1(1);
    const PathDecomposition single = path_decomposition_from_uncle_tree(k1, uncle_tree(k1, 0));
    CHECK(single.bags == std::vector<std::vector<int>>{{0}});

    // A path rooted at an endpoint has one leaf, hence one bag of everything.
    const SimpleGraph p4 = tu::path_graph(4);
    const PathDecomposition pd4 = path_decomposition_from_uncle_tree(p4, uncle_tree(p4, 0));
    CHECK(pd4.bags == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(pd4.width() == 3);

    const SimpleGraph c4 = tu::cycle_graph(4);
    const PathDecomposition pdc = path_decomposition_from_uncle_tree(c4, uncle_tree(c4, 0));
    CHECK(pdc.bags == std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 3}});
    CHECK(verify_path_decomposition(c4, pdc));
}

TEST_CASE("verify_path_decomposition") {
    const SimpleGraph p3 = tu::path_graph(3);
    CHECK(verify_path_decomposition(p3, PathDecomposition{{{0, 1}, {1, 2}}}));
    // Vertex 1 appears in bags 1 and 3 but not 2.
    CHECK_FALSE(verify_path_decomposition(p3, PathDecomposition{{{0, 1}, {2}, {1, 2}}}));
    // Edge 0-1 is never inside a bag.
    CHECK_FALSE(verify_path_decomposition(SimpleGraph(2, {{0, 1}}), PathDecomposition{{{0}, {1}}}));
    // Missing vertex.
    CHECK_FALSE(verify_path_decomposition(p3, PathDecomposition{{{0, 1}}}));
}

TEST_CASE("tree-depth forest shapes") {
    const SimpleGraph star = tu::star_graph(3);
    const RootedForest f = treedepth_forest(star, uncle_tree(star, 0));
    CHECK(f.roots == std::vector<int>{0});
    CHECK(f.parent == std::vector<int>{-1, 0, 1, 2});
    CHECK(f.height() == 4);
    // Star with 3 leaves is P4-free; with t = 4 the edge depth fits the bound.
    CHECK(treedepth_bound_holds(star, f, 4));

    const SimpleGraph edge(2, {{0, 1}});
    const RootedForest fe = treedepth_forest(edge, uncle_tree(edge, 0));
    CHECK(fe.parent == std::vector<int>{-1, 0});
    CHECK(fe.height() == 2);
    CHECK(treedepth_bound_holds(edge, fe, 3));
}

TEST_CASE("width bound examples") {
    const SimpleGraph k4 = tu::complete_graph(4);
    const PathDecomposition pd = path_decomposition_from_uncle_tree(k4, uncle_tree(k4, 0));
    CHECK(width_bound_holds(k4, pd, 4));

    CHECK(width_bound_holds(SimpleGraph(3), PathDecomposition{{{0}, {1}, {2}}}, 4));

    const SimpleGraph p10 = tu::path_graph(10);
    const PathDecomposition pdp = path_decomposition_from_uncle_tree(p10, uncle_tree(p10, 0));
    CHECK(width_bound_holds(p10, pdp, 11));
}

TEST_CASE("decomposition pipeline properties on random connected graphs") {
    tu::Rng rng(7003);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = tu::rand_int(rng, 1, 12);
        const SimpleGraph g = tu::random_connected_graph(rng, n, 0.25);
        const PlaneTree t = uncle_tree(g, 0);
        REQUIRE(verify_uncle_tree(g, t));

        // Root paths are induced.
        for (int v = 0; v < n; ++v) {
            const auto path = t.root_path(v);
            for (std::size_t i = 0; i < path.size(); ++i)
                for (std::size_t j = i + 2; j < path.size(); ++j)
                    CHECK_FALSE(g.has_edge(path[i], path[j]));
        }

        const PathDecomposition pd = path_decomposition_from_uncle_tree(g, t);
        REQUIRE(verify_path_decomposition(g, pd));
        const int t_param = longest_induced_path_order(g, n + 1) + 1;
        CHECK(width_bound_holds(g, pd, t_param));

        const RootedForest f = treedepth_forest(g, t);
        for (const auto& [u, v] : g.edges())
            CHECK((f.is_ancestor(u, v) || f.is_ancestor(v, u)));
        CHECK(treedepth_bound_holds(g, f, t_param));
    }
}

TEST_CASE("component helpers cover disconnected graphs") {
    const SimpleGraph g(5, {{0, 1}, {2, 3}, {3, 4}});
    const PathDecomposition pd = path_decomposition_components(g);
    CHECK(verify_path_decomposition(g, pd));

    const RootedForest f = treedepth_forest_components(g);
    CHECK(f.roots == std::vector<int>{0, 2});
    for (const auto& [u, v] : g.edges())
        CHECK((f.is_ancestor(u, v) || f.is_ancestor(v, u)));

    const PathDecomposition empty = path_decomposition_components(SimpleGraph(0));
    CHECK(empty.bags.empty());
}
