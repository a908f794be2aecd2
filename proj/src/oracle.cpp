#include "homcount/oracle.hpp"

namespace homcount {

long long brute_force_colouring_count(const SimpleGraph& g, int k, unsigned long long cap) {
    if (k < 0) throw std::invalid_argument("negative colour count");
    const int n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;

    unsigned long long total = 1;
    for (int v = 0; v < n; ++v) {
        if (total > cap / static_cast<unsigned long long>(k))
            throw OracleCapExceeded("k^n exceeds the cap");
        total *= static_cast<unsigned long long>(k);
    }

    const auto edges = g.edges();
    std::vector<int> colour(n, 0);
    long long count = 0;
    for (unsigned long long step = 0; step < total; ++step) {
        bool proper = true;
        for (const auto& [u, v] : edges) {
            if (colour[u] == colour[v]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        for (int v = 0; v < n; ++v) {
            if (++colour[v] < k) break;
            colour[v] = 0;
        }
    }
    return count;
}

}  // namespace homcount
