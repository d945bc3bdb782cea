#pragma once

#include <climits>
#include <vector>

#include "rnaposet/bitset.hpp"

namespace rnaposet {

// Size of a maximum clique in the graph given by symmetric adjacency rows.
// The search returns as soon as a clique of size `stop_at` is found.
int max_clique_size(const std::vector<DynamicBitset>& adjacency, int stop_at = INT_MAX);

}  // namespace rnaposet
