#pragma once

#include <map>
#include <utility>
#include <vector>

#include "homcount/graph.hpp"
#include "homcount/rational.hpp"

namespace homcount {

/// Per-vertex allowed colour sets, each sorted ascending.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment all_colours(int n, int colour_count);
    int size() const { return static_cast<int>(lists.size()); }
};

/// (vertex, colour) -> exact rational weight; absent pairs weigh 1.
class WeightTable {
public:
    const Rational& get(int v, int h) const;
    void set(int v, int h, Rational w);
    bool contains(int v, int h) const { return w_.count({v, h}) > 0; }
    const std::map<std::pair<int, int>, Rational>& entries() const { return w_; }

private:
    std::map<std::pair<int, int>, Rational> w_;
};

struct Instance {
    SimpleGraph graph;
    ListAssignment lists;
    WeightTable weights;

    /// Sum of list sizes.
    long long weight() const;
    /// True iff every list has at least 2 colours.
    bool reduced() const;
};

/// Instance on g with all colours allowed everywhere and unit weights.
Instance make_unit_instance(SimpleGraph g, int colour_count);

struct RestrictedInstance {
    Instance instance;
    std::vector<int> old_to_new;  // -1 for removed vertices
};

/// Sub-instance induced on keep_sorted, lists and weights re-indexed.
RestrictedInstance restrict_instance(const Instance& inst, const std::vector<int>& keep_sorted);

/// Sub-instance on all vertices except v. Throws when v is out of range.
RestrictedInstance delete_vertex(const Instance& inst, int v);

/// Throws std::invalid_argument when the lists do not fit the graph or
/// reference a colour outside the target.
void validate_lists(const Instance& inst, const TargetGraph& target);

}  // namespace homcount
