#include "homcount/polynomial.hpp"

#include <stdexcept>

namespace homcount {

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::zero(int num_vars) { return Polynomial(num_vars); }

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(std::vector<int>(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(int num_vars, int var, const Rational& coeff) {
    if (var < 0 || var >= num_vars) throw std::invalid_argument("variable out of range");
    Polynomial p(num_vars);
    std::vector<int> exps(num_vars, 0);
    exps[var] = 1;
    p.add_term(exps, coeff);
    return p;
}

void Polynomial::add_term(const std::vector<int>& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::invalid_argument("exponent vector has the wrong length");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::invalid_argument("exponent vector has the wrong length");
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& point) const {
    Rational total = 0;
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (int var = 0; var < num_vars_; ++var) {
            if (exps[var] == 0) continue;
            const auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("point does not cover variable " + std::to_string(var));
            for (int i = 0; i < exps[var]; ++i) term *= it->second;
        }
        total += term;
    }
    return total;
}

Rational Polynomial::evaluate_all_ones() const {
    Rational total = 0;
    for (const auto& [exps, coeff] : terms_) total += coeff;
    return total;
}

Polynomial Polynomial::substitute_one(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable out of range");
    Polynomial out(num_vars_);
    for (const auto& [exps, coeff] : terms_) {
        std::vector<int> reduced = exps;
        reduced[var] = 0;
        out.add_term(reduced, coeff);
    }
    return out;
}

int Polynomial::total_degree() const {
    int best = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (int e : exps) d += e;
        best = std::max(best, d);
    }
    return best;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("variable count mismatch");
    Polynomial out = a;
    for (const auto& [exps, coeff] : b.terms_) out.add_term(exps, coeff);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_)
        throw std::invalid_argument("variable count mismatch");
    Polynomial out(a.num_vars_);
    std::vector<int> exps(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.num_vars_; ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

}  // namespace homcount
