#include "homcount/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcount {

namespace {
const Rational kUnitWeight = 1;
}

ListAssignment ListAssignment::all_colours(int n, int colour_count) {
    std::vector<int> full(colour_count);
    for (int h = 0; h < colour_count; ++h) full[h] = h;
    ListAssignment out;
    out.lists.assign(n, full);
    return out;
}

const Rational& WeightTable::get(int v, int h) const {
    const auto it = w_.find({v, h});
    return it == w_.end() ? kUnitWeight : it->second;
}

void WeightTable::set(int v, int h, Rational w) { w_[{v, h}] = std::move(w); }

long long Instance::weight() const {
    long long total = 0;
    for (const auto& list : lists.lists) total += static_cast<long long>(list.size());
    return total;
}

bool Instance::reduced() const {
    for (const auto& list : lists.lists)
        if (list.size() < 2) return false;
    return true;
}

Instance make_unit_instance(SimpleGraph g, int colour_count) {
    Instance inst;
    inst.lists = ListAssignment::all_colours(g.vertex_count(), colour_count);
    inst.graph = std::move(g);
    return inst;
}

RestrictedInstance restrict_instance(const Instance& inst, const std::vector<int>& keep_sorted) {
    const int n = inst.graph.vertex_count();
    RestrictedInstance out;
    out.old_to_new.assign(n, -1);
    out.instance.graph = induced_subgraph(inst.graph, keep_sorted);
    for (std::size_t i = 0; i < keep_sorted.size(); ++i)
        out.old_to_new[keep_sorted[i]] = static_cast<int>(i);
    out.instance.lists.lists.reserve(keep_sorted.size());
    for (int v : keep_sorted) out.instance.lists.lists.push_back(inst.lists.lists.at(v));
    for (const auto& [key, w] : inst.weights.entries()) {
        const int nv = out.old_to_new[key.first];
        if (nv >= 0) out.instance.weights.set(nv, key.second, w);
    }
    return out;
}

RestrictedInstance delete_vertex(const Instance& inst, int v) {
    const int n = inst.graph.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    std::vector<int> keep;
    keep.reserve(n - 1);
    for (int u = 0; u < n; ++u)
        if (u != v) keep.push_back(u);
    return restrict_instance(inst, keep);
}

void validate_lists(const Instance& inst, const TargetGraph& target) {
    if (inst.lists.size() != inst.graph.vertex_count())
        throw std::invalid_argument("list assignment does not match the vertex count");
    const int k = target.colour_count();
    for (const auto& list : inst.lists.lists) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 0 || list[i] >= k)
                throw std::invalid_argument("list references an unknown colour");
            if (i > 0 && list[i - 1] >= list[i])
                throw std::invalid_argument("lists must be sorted and duplicate free");
        }
    }
}

}  // namespace homcount
