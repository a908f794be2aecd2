#pragma once

#include <concepts>
#include <stdexcept>
#include <utility>

#include "homcount/polynomial.hpp"
#include "homcount/rational.hpp"

namespace homcount {

enum class SemiringKind { partition_polynomial, count, min_cost, decision };

/// Value of the (min, +) semiring. Default-constructed as +infinity, the
/// identity of min and the absorbing element of +.
class Cost {
public:
    Cost() = default;
    explicit Cost(Rational v) : finite_(true), value_(std::move(v)) {}
    static Cost infinity() { return Cost(); }

    bool is_infinite() const { return !finite_; }
    const Rational& value() const {
        if (!finite_) throw std::logic_error("infinite cost has no value");
        return value_;
    }

    bool operator==(const Cost& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }

private:
    bool finite_ = false;
    Rational value_;
};

/// Commutative semiring over Value with per-(vertex, colour) atoms.
template <typename S>
concept Semiring = requires(const S s, const typename S::Value& a, const typename S::Value& b,
                            const Rational& w) {
    { s.zero() } -> std::same_as<typename S::Value>;
    { s.one() } -> std::same_as<typename S::Value>;
    { s.plus(a, b) } -> std::same_as<typename S::Value>;
    { s.times(a, b) } -> std::same_as<typename S::Value>;
    { s.atom(0, 0, w) } -> std::same_as<typename S::Value>;
};

/// Sparse polynomials over the colours; atom(v, h, w) = w * x_h.
struct PartitionSemiring {
    using Value = Polynomial;
    static constexpr SemiringKind kind = SemiringKind::partition_polynomial;
    int colour_count = 0;

    Value zero() const { return Polynomial::zero(colour_count); }
    Value one() const { return Polynomial::constant(colour_count, 1); }
    Value plus(const Value& a, const Value& b) const { return a + b; }
    Value times(const Value& a, const Value& b) const { return a * b; }
    Value atom(int, int h, const Rational& w) const {
        return Polynomial::monomial(colour_count, h, w);
    }
};

/// Exact rationals under (+, *); with unit weights this counts colourings.
struct CountSemiring {
    using Value = Rational;
    static constexpr SemiringKind kind = SemiringKind::count;

    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value plus(const Value& a, const Value& b) const { return a + b; }
    Value times(const Value& a, const Value& b) const { return a * b; }
    Value atom(int, int, const Rational& w) const { return w; }
};

/// (min, +) over costs; the solve yields the minimum total weight.
struct MinCostSemiring {
    using Value = Cost;
    static constexpr SemiringKind kind = SemiringKind::min_cost;

    Value zero() const { return Cost::infinity(); }
    Value one() const { return Cost(Rational(0)); }
    Value plus(const Value& a, const Value& b) const {
        if (a.is_infinite()) return b;
        if (b.is_infinite()) return a;
        return a.value() <= b.value() ? a : b;
    }
    Value times(const Value& a, const Value& b) const {
        if (a.is_infinite() || b.is_infinite()) return Cost::infinity();
        return Cost(a.value() + b.value());
    }
    Value atom(int, int, const Rational& w) const { return Cost(w); }
};

/// Booleans under (or, and); the solve decides colourability.
struct DecisionSemiring {
    using Value = bool;
    static constexpr SemiringKind kind = SemiringKind::decision;

    Value zero() const { return false; }
    Value one() const { return true; }
    Value plus(const Value& a, const Value& b) const { return a || b; }
    Value times(const Value& a, const Value& b) const { return a && b; }
    Value atom(int, int, const Rational&) const { return true; }
};

static_assert(Semiring<PartitionSemiring>);
static_assert(Semiring<CountSemiring>);
static_assert(Semiring<MinCostSemiring>);
static_assert(Semiring<DecisionSemiring>);

}  // namespace homcount
