#include "homcount/dp.hpp"

#include <algorithm>

namespace homcount {

bool bag_colouring_valid(const Instance& inst, const TargetGraph& target,
                         const std::vector<int>& bag_sorted, const BagColouring& colours) {
    if (colours.size() != bag_sorted.size()) return false;
    for (std::size_t i = 0; i < bag_sorted.size(); ++i) {
        const auto& list = inst.lists.lists.at(bag_sorted[i]);
        if (!std::binary_search(list.begin(), list.end(), colours[i])) return false;
    }
    for (std::size_t i = 0; i < bag_sorted.size(); ++i)
        for (std::size_t j = i + 1; j < bag_sorted.size(); ++j)
            if (inst.graph.has_edge(bag_sorted[i], bag_sorted[j]) &&
                !target.has_edge(colours[i], colours[j]))
                return false;
    return true;
}

void for_each_bag_colouring(const Instance& inst, const TargetGraph& target,
                            const std::vector<int>& bag_sorted,
                            const std::function<void(const BagColouring&)>& fn) {
    const std::size_t m = bag_sorted.size();
    BagColouring current(m, -1);

    // Backtracking in bag order; each vertex checks only edges to earlier bag
    // vertices, so completed assignments are exactly the valid colourings and
    // they emerge in lexicographic order.
    std::function<void(std::size_t)> assign = [&](std::size_t depth) {
        if (depth == m) {
            fn(current);
            return;
        }
        const int v = bag_sorted[depth];
        for (int c : inst.lists.lists.at(v)) {
            bool ok = true;
            for (std::size_t i = 0; i < depth; ++i) {
                if (inst.graph.has_edge(bag_sorted[i], v) && !target.has_edge(current[i], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                current[depth] = c;
                assign(depth + 1);
            }
        }
    };
    assign(0);
}

std::vector<BagColouring> enumerate_bag_colourings(const Instance& inst, const TargetGraph& target,
                                                   const std::vector<int>& bag_sorted) {
    std::vector<BagColouring> out;
    for_each_bag_colouring(inst, target, bag_sorted,
                           [&](const BagColouring& st) { out.push_back(st); });
    return out;
}

}  // namespace homcount
