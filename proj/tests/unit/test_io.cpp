#include <doctest.h>

#include <sstream>

#include "homcount/io.hpp"
#include "homcount/oracle.hpp"

#include "../testutil.hpp"

using namespace homcount;
namespace tu = homcount::testutil;

TEST_CASE("rational formatting and parsing") {
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("graph parsing") {
    std::istringstream ok("4 3\n0 1\n1 2\n2 3\n");
    const SimpleGraph g = parse_graph(ok);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);

    std::istringstream reversed("2 1\n1 0\n");
    CHECK_THROWS_AS(parse_graph(reversed), ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(parse_graph(loop), ParseError);
    std::istringstream missing("2 2\n0 1\n");
    CHECK_THROWS_AS(parse_graph(missing), ParseError);
    std::istringstream trailing("2 1\n0 1\n0 1\n");
    CHECK_THROWS_AS(parse_graph(trailing), ParseError);
}

TEST_CASE("target parsing") {
    std::istringstream ok("2\na\nb\na b\nb b\n");
    const TargetGraph h = parse_target(ok);
    CHECK(h.colour_count() == 2);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_loop(1));

    std::istringstream unknown("2\na\nb\na z\n");
    CHECK_THROWS_AS(parse_target(unknown), ParseError);
    std::istringstream dangling("2\na\nb\na\n");
    CHECK_THROWS_AS(parse_target(dangling), ParseError);
    std::istringstream duplicate("2\na\nb\na b\nb a\n");
    CHECK_THROWS_AS(parse_target(duplicate), ParseError);
}

TEST_CASE("lists parsing") {
    const TargetGraph h({"a", "b", "c"}, {{0, 1}, {1, 2}});
    std::istringstream ok("0: b a\n\n2:\n");
    const ListAssignment lists = parse_lists(ok, h, 3);
    CHECK(lists.lists[0] == std::vector<int>{0, 1});
    CHECK(lists.lists[1] == std::vector<int>{0, 1, 2});  // defaulted
    CHECK(lists.lists[2].empty());

    std::istringstream bad_vertex("9: a\n");
    CHECK_THROWS_AS(parse_lists(bad_vertex, h, 3), ParseError);
    std::istringstream bad_colour("0: z\n");
    CHECK_THROWS_AS(parse_lists(bad_colour, h, 3), ParseError);
    std::istringstream repeated("0: a\n0: b\n");
    CHECK_THROWS_AS(parse_lists(repeated, h, 3), ParseError);
    std::istringstream no_colon("0 a\n");
    CHECK_THROWS_AS(parse_lists(no_colon, h, 3), ParseError);
}

TEST_CASE("weights parsing") {
    const TargetGraph h({"a", "b"}, {{0, 1}});
    std::istringstream ok("0 a 3/2\n1 b -1\n");
    const WeightTable w = parse_weights(ok, h, 2);
    CHECK(w.get(0, 0) == Rational(3, 2));
    CHECK(w.get(1, 1) == Rational(-1));
    CHECK(w.get(1, 0) == 1);

    std::istringstream dup("0 a 1\n0 a 2\n");
    CHECK_THROWS_AS(parse_weights(dup, h, 2), ParseError);
    std::istringstream bad("0 a x\n");
    CHECK_THROWS_AS(parse_weights(bad, h, 2), ParseError);
}

TEST_CASE("polynomial text form") {
    const TargetGraph k2({"a", "b"}, {{0, 1}});
    Polynomial p(2);
    p.add_term({2, 1}, 1);
    p.add_term({1, 2}, 1);
    CHECK(polynomial_to_text(p, colour_tokens(k2)) == "1 * x_a^2 x_b + 1 * x_a x_b^2");

    Polynomial q(2);
    q.add_term({0, 0}, 1);
    q.add_term({1, 0}, 3);
    q.add_term({2, 0}, 1);
    CHECK(polynomial_to_text(q, {"x", "y"}) == "1 * x^2 + 3 * x + 1");

    CHECK(polynomial_to_text(Polynomial::zero(2), colour_tokens(k2)) == "0");
    CHECK(polynomial_to_text(Polynomial::constant(2, Rational(1, 2)), colour_tokens(k2)) == "1/2");
}

TEST_CASE("polynomial json round trip") {
    tu::Rng rng(7012);
    const auto [inst, target] = tu::random_instance(rng, 6, 3);
    const Polynomial p =
        brute_force_solve(inst, target, PartitionSemiring{target.colour_count()});
    std::vector<std::string> names;
    for (int h = 0; h < target.colour_count(); ++h) names.push_back(target.name(h));
    const auto j = polynomial_to_json(p, names);
    const auto parsed = nlohmann::json::parse(j.dump());
    CHECK(polynomial_from_json(parsed, names) == p);
}

TEST_CASE("decomposition and forest json") {
    PathDecomposition pd{{{0, 1, 2, 3}, {0, 3}}};
    const auto dj = decomposition_to_json(pd);
    CHECK(dj["width"] == 3);
    CHECK(dj["bags"].size() == 2);

    RootedForest f;
    f.roots = {0};
    f.parent = {-1, 0};
    const auto fj = forest_to_json(f);
    CHECK(fj["parent"][0].is_null());
    CHECK(fj["parent"][1] == 0);
    CHECK(fj["height"] == 2);
}
