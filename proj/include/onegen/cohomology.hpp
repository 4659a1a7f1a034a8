#pragma once

#include <utility>
#include <vector>

#include "onegen/scalar.hpp"

namespace onegen {

/// h^i(P^s, O(d)).
struct CohomologyQuery {
    int s = 0;
    int i = 0;
    int d = 0;
};

Count h_dim(const CohomologyQuery &q);

/// (twist, rank) of the resolution of the pushforward to P^{m-1}:
/// (0, 1) followed by (-(m+i-1), b_i) for i = 1..n-m+1.
std::vector<std::pair<int, Count>> pushforward_shape(std::size_t m, std::size_t n);

} // namespace onegen
