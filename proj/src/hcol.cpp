#include "homcount/hcol.hpp"

#include <cmath>

namespace homcount {

double degree_threshold(int n, int t, double scale) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (t < 4) throw std::invalid_argument("t must be at least 4");
    return scale * std::sqrt(n * std::log(static_cast<double>(n)) / t);
}

double recursion_bound(int w, int /*t*/, double c) {
    if (w < 2) throw std::invalid_argument("w must be at least 2");
    return std::exp2(c * std::sqrt(w * std::log(static_cast<double>(w))));
}

}  // namespace homcount
