#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "homcount/decomposition.hpp"
#include "homcount/instance.hpp"
#include "homcount/semiring.hpp"

namespace homcount {

/// Colours assigned to a bag, parallel to the bag's sorted vertex list.
using BagColouring = std::vector<int>;

/// Calls fn for every list-respecting colouring of the bag whose internal
/// edges map to target edges, in lexicographic order (bag vertices ascending
/// by id, colours ascending).
void for_each_bag_colouring(const Instance& inst, const TargetGraph& target,
                            const std::vector<int>& bag_sorted,
                            const std::function<void(const BagColouring&)>& fn);

/// Materialized variant of for_each_bag_colouring.
std::vector<BagColouring> enumerate_bag_colourings(const Instance& inst, const TargetGraph& target,
                                                   const std::vector<int>& bag_sorted);

/// True iff the colouring respects the lists and maps every bag-internal
/// edge onto a target edge.
bool bag_colouring_valid(const Instance& inst, const TargetGraph& target,
                         const std::vector<int>& bag_sorted, const BagColouring& colours);

namespace detail {

// Statically dispatched variant of the bag colouring walk for the solver's
// hot loop; fn() reads the completed assignment from `current`.
template <typename Fn>
void visit_bag_colourings(const Instance& inst, const TargetGraph& target,
                          const std::vector<int>& bag_sorted, BagColouring& current,
                          std::size_t depth, Fn&& fn) {
    if (depth == bag_sorted.size()) {
        fn();
        return;
    }
    const int v = bag_sorted[depth];
    for (int c : inst.lists.lists[v]) {
        bool ok = true;
        for (std::size_t i = 0; i < depth; ++i) {
            if (inst.graph.has_edge(bag_sorted[i], v) && !target.has_edge(current[i], c)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            current[depth] = c;
            visit_bag_colourings(inst, target, bag_sorted, current, depth + 1, fn);
        }
    }
}

}  // namespace detail

/// Folds the semiring over all list colourings of the instance by a single
/// left-to-right sweep over the bags. Bag colourings are streamed, never
/// materialized; at any moment the solver holds one bucket table per side of
/// the current bag boundary, keyed by the colours on the boundary vertices.
/// Throws std::invalid_argument when the decomposition is not valid for the
/// graph or a list references an unknown colour.
template <Semiring S>
typename S::Value dp_solve(const Instance& inst, const TargetGraph& target,
                           const PathDecomposition& pd, const S& sr) {
    validate_lists(inst, target);
    if (!verify_path_decomposition(inst.graph, pd))
        throw std::invalid_argument("invalid path decomposition");
    if (pd.bags.empty()) return sr.one();  // empty graph

    using Value = typename S::Value;
    using Buckets = std::map<std::vector<int>, Value>;

    // Entering the first bag there is a single empty-interface state.
    Buckets incoming;
    incoming.emplace(std::vector<int>{}, sr.one());
    std::vector<int> prev_bag;

    static const std::vector<int> kNoBag;
    for (std::size_t b = 0; b < pd.bags.size(); ++b) {
        const std::vector<int>& bag = pd.bags[b];
        const std::vector<int>& next_bag = (b + 1 < pd.bags.size()) ? pd.bags[b + 1] : kNoBag;

        // Positions within this bag of the vertices shared with the previous
        // bag (the lookup key), of the fresh vertices (atom carriers), and of
        // the vertices shared with the next bag (the outgoing key).
        std::vector<int> prev_pos, next_pos;
        std::vector<char> is_new(bag.size(), 1);
        for (std::size_t i = 0; i < bag.size(); ++i) {
            if (std::binary_search(prev_bag.begin(), prev_bag.end(), bag[i])) {
                prev_pos.push_back(static_cast<int>(i));
                is_new[i] = 0;
            }
            if (std::binary_search(next_bag.begin(), next_bag.end(), bag[i]))
                next_pos.push_back(static_cast<int>(i));
        }

        Buckets outgoing;
        std::vector<int> key_in(prev_pos.size()), key_out(next_pos.size());
        BagColouring st(bag.size(), -1);
        detail::visit_bag_colourings(inst, target, bag, st, 0, [&] {
            for (std::size_t i = 0; i < prev_pos.size(); ++i) key_in[i] = st[prev_pos[i]];
            const auto hit = incoming.find(key_in);
            if (hit == incoming.end()) return;
            Value v = hit->second;
            for (std::size_t i = 0; i < bag.size(); ++i)
                if (is_new[i])
                    v = sr.times(v, sr.atom(bag[i], st[i], inst.weights.get(bag[i], st[i])));
            for (std::size_t i = 0; i < next_pos.size(); ++i) key_out[i] = st[next_pos[i]];
            const auto slot = outgoing.find(key_out);
            if (slot == outgoing.end())
                outgoing.emplace(key_out, std::move(v));
            else
                slot->second = sr.plus(slot->second, v);
        });
        incoming = std::move(outgoing);
        prev_bag = bag;
    }

    const auto it = incoming.find(std::vector<int>{});
    return it == incoming.end() ? sr.zero() : it->second;
}

/// dp_solve with a decomposition constructed per connected component.
template <Semiring S>
typename S::Value dp_solve_components(const Instance& inst, const TargetGraph& target, const S& sr) {
    return dp_solve(inst, target, path_decomposition_components(inst.graph), sr);
}

}  // namespace homcount
