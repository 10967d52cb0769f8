#pragma once

#include <cstdint>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

struct Partition {
  std::vector<int> assignment;  // node -> community id, 0..k-1
  double q = 0.0;               // modularity of the partition
  int community_count = 0;
};

// Weighted Newman modularity: Q = sum_c [ W_c/W - (S_c/2W)^2 ] with W the
// total edge weight, W_c the intra-community weight and S_c the community
// weighted-degree sum. Edgeless graphs score 0.
double modularity(const Graph& g, const std::vector<int>& assignment);

// Two-phase Louvain: local moves while any gain exceeds 1e-9, then
// aggregation, repeated to a fixed point. Sweep order is shuffled by the
// seed; gain ties break toward the lowest community id, so the result is
// reproducible for a given (graph, seed). The reported q comes from the
// algorithm's own incremental bookkeeping (tests recompute it with
// modularity()).
Partition louvain(const Graph& g, std::uint64_t seed);

}  // namespace charnet
