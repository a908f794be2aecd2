#pragma once

#include <map>
#include <vector>

#include "homcount/rational.hpp"

namespace homcount {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vectors of fixed length (one slot per colour),
/// stored in lexicographic order. Zero coefficients are never kept, so two
/// polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int num_vars);

    static Polynomial zero(int num_vars);
    static Polynomial constant(int num_vars, const Rational& c);
    /// coeff * x_var
    static Polynomial monomial(int num_vars, int var, const Rational& coeff);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& coeff);
    Rational coefficient(const std::vector<int>& exps) const;

    /// Exact evaluation; every variable occurring with a positive exponent
    /// must be present in the point.
    Rational evaluate(const std::map<int, Rational>& point) const;
    Rational evaluate_all_ones() const;

    /// Sets x_var := 1, merging terms.
    Polynomial substitute_one(int var) const;

    /// Largest term degree; 0 for the zero polynomial.
    int total_degree() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& other) const = default;

private:
    int num_vars_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

}  // namespace homcount
