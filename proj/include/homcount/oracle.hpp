#pragma once

#include <stdexcept>
#include <vector>

#include "homcount/instance.hpp"
#include "homcount/semiring.hpp"

namespace homcount {

inline constexpr unsigned long long kDefaultOracleCap = 10'000'000;

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reference solver: walks every map in the product of the lists, keeps the
/// ones sending each graph edge to a target edge, and folds the semiring over
/// them. Shares no logic with the production solvers on purpose.
template <Semiring S>
typename S::Value brute_force_solve(const Instance& inst, const TargetGraph& target, const S& sr,
                                    unsigned long long cap = kDefaultOracleCap) {
    validate_lists(inst, target);
    const int n = inst.graph.vertex_count();

    unsigned long long total = 1;
    for (const auto& list : inst.lists.lists) {
        if (list.empty()) return sr.zero();
        if (total > cap / list.size()) throw OracleCapExceeded("list product exceeds the cap");
        total *= list.size();
    }

    const auto edges = inst.graph.edges();
    std::vector<std::size_t> idx(n, 0);
    typename S::Value acc = sr.zero();
    for (unsigned long long step = 0; step < total; ++step) {
        bool valid = true;
        for (const auto& [u, v] : edges) {
            if (!target.has_edge(inst.lists.lists[u][idx[u]], inst.lists.lists[v][idx[v]])) {
                valid = false;
                break;
            }
        }
        if (valid) {
            typename S::Value term = sr.one();
            for (int v = 0; v < n; ++v) {
                const int c = inst.lists.lists[v][idx[v]];
                term = sr.times(term, sr.atom(v, c, inst.weights.get(v, c)));
            }
            acc = sr.plus(acc, term);
        }
        for (int v = 0; v < n; ++v) {
            if (++idx[v] < inst.lists.lists[v].size()) break;
            idx[v] = 0;
        }
    }
    return acc;
}

/// Number of proper k-colourings by direct enumeration of all k^n maps.
long long brute_force_colouring_count(const SimpleGraph& g, int k,
                                      unsigned long long cap = kDefaultOracleCap);

}  // namespace homcount
