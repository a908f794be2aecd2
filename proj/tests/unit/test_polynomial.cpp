#include <doctest.h>

#include "homcount/polynomial.hpp"

using namespace homcount;

namespace {

Polynomial from_terms(int nv, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
    Polynomial p(nv);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("polynomial addition") {
    const Polynomial xa = Polynomial::monomial(2, 0, 1);
    const Polynomial xb = Polynomial::monomial(2, 1, 1);
    CHECK(xa + xb == from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(xa + Polynomial::monomial(2, 0, -1) == Polynomial::zero(2));
    CHECK(from_terms(2, {{{2, 1}, 2}}) + from_terms(2, {{{2, 1}, 3}}) ==
          from_terms(2, {{{2, 1}, 5}}));
}

TEST_CASE("polynomial multiplication") {
    const Polynomial sum = from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(sum * sum == from_terms(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
    const Polynomial p = from_terms(2, {{{2, 1}, 3}, {{0, 1}, Rational(1, 2)}});
    CHECK(p * Polynomial::constant(2, 1) == p);
    CHECK(p * Polynomial::zero(2) == Polynomial::zero(2));
}

TEST_CASE("coefficient lookup") {
    const Polynomial p = from_terms(2, {{{2, 1}, 1}, {{1, 2}, 1}});
    CHECK(p.coefficient({2, 1}) == 1);
    CHECK(p.coefficient({1, 2}) == 1);
    CHECK(p.coefficient({3, 0}) == 0);
    CHECK_THROWS_AS(p.coefficient({1}), std::invalid_argument);
}

TEST_CASE("evaluation") {
    const Polynomial p = from_terms(2, {{{2, 1}, 1}, {{1, 2}, 1}});
    CHECK(p.evaluate({{0, Rational(2)}, {1, Rational(3)}}) == Rational(30));
    CHECK(p.evaluate_all_ones() == 2);
    CHECK(Polynomial::zero(2).evaluate({{0, Rational(5)}, {1, Rational(7)}}) == 0);
    CHECK_THROWS_AS(p.evaluate({{0, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("substitute_one") {
    CHECK(from_terms(2, {{{1, 1}, 1}}).substitute_one(1) == from_terms(2, {{{1, 0}, 1}}));
    // (x_a + x_b)^2 with x_b := 1 becomes x_a^2 + 2 x_a + 1.
    const Polynomial sum = from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK((sum * sum).substitute_one(1) ==
          from_terms(2, {{{2, 0}, 1}, {{1, 0}, 2}, {{0, 0}, 1}}));
}

TEST_CASE("total degree") {
    CHECK(Polynomial::zero(2).total_degree() == 0);
    CHECK(from_terms(2, {{{2, 1}, 1}, {{0, 1}, 4}}).total_degree() == 3);
}
