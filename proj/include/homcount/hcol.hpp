#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "homcount/dp.hpp"
#include "homcount/instance.hpp"
#include "homcount/semiring.hpp"

namespace homcount {

struct HColConfig {
    int n0 = 10;                          // exhaustive cutoff
    int t = 6;                            // path parameter, t >= 4
    Rational degree_threshold_scale = 1;  // multiplier on the low-degree rule
    bool debug = false;                   // arms the inline branching assertions
    std::ostream* trace = nullptr;        // per-node trace sink, off when null
};

struct RecursionStats {
    long long nodes = 0;
    int max_depth = 0;
    std::array<long long, 6> rule_counts{};  // indexed by rule - 1
};

/// Raised by the debug-only branching assertions.
struct DebugAssertionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// scale * sqrt(n * ln(n) / t); 0 when n = 1.
double degree_threshold(int n, int t, double scale);

/// 2^(c * sqrt(w * ln(w))), the node-count comparison curve for the
/// recursion statistics. t is the path parameter c was derived from and does
/// not enter the formula. Throws for w < 2.
double recursion_bound(int w, int t, double c);

template <Semiring S>
struct HColOutcome {
    typename S::Value value;
    RecursionStats stats;
};

namespace detail {

template <Semiring S>
class HColRun {
public:
    HColRun(const TargetGraph& target, const HColConfig& cfg, const S& sr)
        : target_(target), cfg_(cfg), sr_(sr),
          target_ok_(check_common_neighbourhood_condition(target)),
          scale_(cfg.degree_threshold_scale.convert_to<double>()) {}

    using Value = typename S::Value;

    Value solve(const Instance& inst, int depth) {
        ++stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        const int n = inst.graph.vertex_count();

        // Rule 1: small graphs are enumerated exhaustively.
        if (n <= cfg_.n0) {
            trace(depth, 1, inst);
            count_rule(1);
            return exhaustive(inst);
        }

        // Rule 2: an empty list admits no colouring.
        for (int v = 0; v < n; ++v) {
            if (inst.lists.lists[v].empty()) {
                trace(depth, 2, inst);
                count_rule(2);
                return sr_.zero();
            }
        }

        // Rule 3: a forced vertex is coloured and removed.
        for (int v = 0; v < n; ++v) {
            if (inst.lists.lists[v].size() != 1) continue;
            trace(depth, 3, inst);
            count_rule(3);
            const int c = inst.lists.lists[v][0];
            const Value factor = sr_.atom(v, c, inst.weights.get(v, c));
            return sr_.times(factor, solve(shrink_and_delete(inst, v, c), depth + 1));
        }

        // Rule 4: disconnected instances factor over their components.
        const auto comps = connected_components(inst.graph);
        if (comps.size() > 1) {
            trace(depth, 4, inst);
            count_rule(4);
            Value acc = sr_.one();
            for (const auto& comp : comps)
                acc = sr_.times(acc, solve(restrict_instance(inst, comp).instance, depth + 1));
            return acc;
        }

        // Rule 5: low maximum degree admits the path-decomposition sweep.
        if (inst.graph.max_degree() <= degree_threshold(n, cfg_.t, scale_)) {
            trace(depth, 5, inst);
            count_rule(5);
            if (comps.size() != 1)
                throw std::logic_error("low-degree rule reached on a disconnected graph");
            const PlaneTree tree = uncle_tree(inst.graph, 0);
            return dp_solve(inst, target_, path_decomposition_from_uncle_tree(inst.graph, tree),
                            sr_);
        }

        // Rule 6: branch on a vertex of maximum degree.
        trace(depth, 6, inst);
        count_rule(6);
        int v = 0;
        for (int u = 1; u < n; ++u)
            if (inst.graph.degree(u) > inst.graph.degree(v)) v = u;
        if (cfg_.debug) check_branching_assertions(inst, v);
        Value acc = sr_.zero();
        for (int c : inst.lists.lists[v]) {
            const Instance child = shrink_and_delete(inst, v, c);
            if (cfg_.debug && child.weight() > inst.weight() - 2)
                throw DebugAssertionError("branch child weight decreased by less than 2");
            const Value factor = sr_.atom(v, c, inst.weights.get(v, c));
            acc = sr_.plus(acc, sr_.times(factor, solve(child, depth + 1)));
        }
        return acc;
    }

    RecursionStats stats() const { return stats_; }
    bool target_ok() const { return target_ok_; }

private:
    // Intersects the lists of v's neighbours with the target neighbourhood of
    // c, then removes v.
    Instance shrink_and_delete(const Instance& inst, int v, int c) const {
        Instance shrunk = inst;
        const auto& allowed = target_.neighbours(c);
        for (int u : inst.graph.neighbours(v)) {
            std::vector<int> next;
            std::set_intersection(shrunk.lists.lists[u].begin(), shrunk.lists.lists[u].end(),
                                  allowed.begin(), allowed.end(), std::back_inserter(next));
            shrunk.lists.lists[u] = std::move(next);
        }
        return delete_vertex(shrunk, v).instance;
    }

    // Backtracking over the product of the lists; assignments extend in
    // vertex order and check edges to already-coloured vertices.
    Value exhaustive(const Instance& inst) const {
        const int n = inst.graph.vertex_count();
        std::vector<int> colour(n, -1);
        Value acc = sr_.zero();
        std::function<void(int, Value)> extend = [&](int v, Value partial) {
            if (v == n) {
                acc = sr_.plus(acc, partial);
                return;
            }
            for (int c : inst.lists.lists[v]) {
                bool ok = true;
                for (int u : inst.graph.neighbours(v)) {
                    if (u < v && !target_.has_edge(colour[u], c)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                colour[v] = c;
                extend(v + 1, sr_.times(partial, sr_.atom(v, c, inst.weights.get(v, c))));
            }
            colour[v] = -1;
        };
        extend(0, sr_.one());
        return acc;
    }

    // Branch instances are reduced (rules 2 and 3 fire first), so for targets
    // meeting the common-neighbourhood condition at most one branch colour may
    // keep more than half of v's neighbours fully compatible.
    void check_branching_assertions(const Instance& inst, int v) const {
        if (!inst.reduced())
            throw DebugAssertionError("branching on a non-reduced instance");
        if (!target_ok_) return;
        const auto& nbrs = inst.graph.neighbours(v);
        const int d = static_cast<int>(nbrs.size());
        int heavy = 0;
        for (int c : inst.lists.lists[v]) {
            const auto& allowed = target_.neighbours(c);
            int covered = 0;
            for (int u : nbrs) {
                const auto& list = inst.lists.lists[u];
                if (std::includes(allowed.begin(), allowed.end(), list.begin(), list.end()))
                    ++covered;
            }
            if (2 * covered > d) ++heavy;
        }
        if (heavy > 1)
            throw DebugAssertionError("more than one branch colour dominates the neighbourhood");
    }

    void count_rule(int rule) { ++stats_.rule_counts[rule - 1]; }

    void trace(int depth, int rule, const Instance& inst) const {
        if (!cfg_.trace) return;
        *cfg_.trace << "hcol depth=" << depth << " rule=" << rule
                    << " n=" << inst.graph.vertex_count() << " weight=" << inst.weight() << "\n";
    }

    const TargetGraph& target_;
    const HColConfig& cfg_;
    const S& sr_;
    bool target_ok_;
    double scale_;
    RecursionStats stats_;
};

}  // namespace detail

/// Branch-and-reduce solver over an arbitrary commutative semiring. Correct
/// for every simple graph and loop-allowed target; the common-neighbourhood
/// condition on the target affects only the recursion size, so a failing
/// target merely earns a trace warning.
template <Semiring S>
HColOutcome<S> hcol_solve(const Instance& inst, const TargetGraph& target, const HColConfig& cfg,
                          const S& sr) {
    if (cfg.n0 < 1) throw std::invalid_argument("n0 must be at least 1");
    if (cfg.t < 4) throw std::invalid_argument("t must be at least 4");
    if (cfg.degree_threshold_scale < 0)
        throw std::invalid_argument("degree threshold scale must be nonnegative");
    validate_lists(inst, target);

    detail::HColRun<S> run(target, cfg, sr);
    if (!run.target_ok() && cfg.trace)
        *cfg.trace << "warning: target fails the common-neighbourhood condition; "
                      "the subexponential node bound does not apply\n";
    HColOutcome<S> out{run.solve(inst, 1), {}};
    out.stats = run.stats();
    return out;
}

}  // namespace homcount
