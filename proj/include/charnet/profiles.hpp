#pragma once

#include <array>
#include <cstdint>

#include "charnet/graph.hpp"

namespace charnet {

// Induced census of the four graphs on 3 nodes: H0 empty, H1 one edge,
// H2 two-edge path, H3 triangle. Sum is C(n,3).
struct Profile3 {
  std::array<std::uint64_t, 4> counts{};
};

// Induced census of the eleven graphs on 4 nodes, in canonical order:
//   F0 empty            F1 one edge         F2 two disjoint edges
//   F3 path + isolate   F4 four-node path   F5 triangle + isolate
//   F6 claw             F7 four-cycle       F8 paw
//   F9 diamond          F10 complete
// Sum is C(n,4).
struct Profile4 {
  std::array<std::uint64_t, 11> counts{};
};

// Edges of each 4-node motif (0,1,2,2,3,3,3,4,4,5,6).
extern const std::array<int, 11> kMotifEdges;
// Index of each motif's complement (F0<->F10, F1<->F9, F2<->F7, F3<->F8,
// F4 self, F5<->F6).
extern const std::array<int, 11> kMotifComplement;

// Computed from node, edge, wedge and triangle counts through the census
// identities; no triple enumeration. Requires n >= 3.
Profile3 profile3(const Graph& g);

// Exact induced 4-node census. Classifies each quadruple's 6-bit edge mask
// through a lookup table keyed on (edge count, degree multiset, triangle
// count); adjacency is held in bitset rows so each test is O(1) word reads.
// OpenMP over the outer node index with a fixed-order integer reduction.
// Requires n >= 4.
Profile4 profile4(const Graph& g);
// Single-threaded kernel, same contract; kept as the reference for tests
// and the benchmark.
Profile4 profile4_serial(const Graph& g);

// Brute-force oracle: classifies every quadruple by the canonical form of
// its edge mask (minimum over the 24 vertex permutations). Independent of
// the lookup-key route above. Guarded to n <= 40.
Profile4 profile4_oracle(const Graph& g);

}  // namespace charnet
