#include "charnet/profiles.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "charnet/common.hpp"

namespace charnet {

const std::array<int, 11> kMotifEdges = {0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6};
const std::array<int, 11> kMotifComplement = {10, 9, 7, 8, 4, 6, 5, 2, 3, 1, 0};

namespace {

// Bit b of a quadruple mask encodes one of the 6 vertex pairs, in the order
// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
constexpr int pair_bit(int a, int b) {
  // a < b, both in 0..3
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

// Reference edge masks of F0..F10 on labeled vertices {0,1,2,3}.
constexpr std::array<unsigned, 11> reference_masks() {
  auto e = [](int a, int b) { return 1u << pair_bit(a, b); };
  return {
      0u,                                                        // F0 empty
      e(0, 1),                                                   // F1 one edge
      e(0, 1) | e(2, 3),                                         // F2 two disjoint edges
      e(0, 1) | e(1, 2),                                         // F3 two-edge path + isolate
      e(0, 1) | e(1, 2) | e(2, 3),                               // F4 path
      e(0, 1) | e(1, 2) | e(0, 2),                               // F5 triangle + isolate
      e(0, 1) | e(0, 2) | e(0, 3),                               // F6 claw
      e(0, 1) | e(1, 2) | e(2, 3) | e(0, 3),                     // F7 cycle
      e(0, 1) | e(1, 2) | e(0, 2) | e(0, 3),                     // F8 paw
      e(0, 1) | e(1, 2) | e(0, 2) | e(0, 3) | e(1, 3),           // F9 diamond
      e(0, 1) | e(0, 2) | e(0, 3) | e(1, 2) | e(1, 3) | e(2, 3)  // F10 complete
  };
}

// (edge count, sorted degree quadruple, triangle count) of a mask. This key
// separates the 11 isomorphism classes on 4 nodes.
struct MaskKey {
  int edges;
  std::array<int, 4> degrees;
  int triangles;
  auto operator<=>(const MaskKey&) const = default;
};

MaskKey mask_key(unsigned mask) {
  MaskKey key{};
  key.edges = __builtin_popcount(mask);
  bool adj[4][4] = {};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (mask & (1u << pair_bit(a, b))) {
        adj[a][b] = adj[b][a] = true;
        ++key.degrees[a];
        ++key.degrees[b];
      }
  std::sort(key.degrees.begin(), key.degrees.end());
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        if (adj[a][b] && adj[b][c] && adj[a][c]) ++key.triangles;
  return key;
}

// mask -> motif index, built once by matching each mask's key against the
// 11 reference keys and checked exhaustively over all 64 masks.
std::array<int, 64> build_mask_table() {
  const auto refs = reference_masks();
  std::map<MaskKey, int> key_to_motif;
  for (int f = 0; f < 11; ++f) {
    if (!key_to_motif.emplace(mask_key(refs[f]), f).second)
      throw InternalError("motif classification key is not injective");
  }
  std::array<int, 64> table{};
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto it = key_to_motif.find(mask_key(mask));
    if (it == key_to_motif.end()) throw InternalError("mask without motif class");
    table[mask] = it->second;
  }
  return table;
}

const std::array<int, 64>& mask_table() {
  static const std::array<int, 64> table = build_mask_table();
  return table;
}

// Adjacency held as n bitset rows of ceil(n/64) words each.
struct BitRows {
  int n;
  int words;
  std::vector<std::uint64_t> bits;

  explicit BitRows(const Graph& g)
      : n(g.node_count()), words((n + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0) {
    for (const Edge& e : g.edges()) {
      set(e.u, e.v);
      set(e.v, e.u);
    }
  }
  void set(int u, int v) { bits[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64); }
  unsigned get(int u, int v) const {
    return (bits[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64)) & 1u;
  }
};

// Census of all quadruples whose smallest vertex is i.
void census_from(const BitRows& rows, int i, std::array<std::uint64_t, 11>& counts) {
  const int n = rows.n;
  const auto& table = mask_table();
  for (int j = i + 1; j < n; ++j) {
    const unsigned eij = rows.get(i, j);
    for (int k = j + 1; k < n; ++k) {
      const unsigned base = eij | (rows.get(i, k) << 1) | (rows.get(j, k) << 3);
      for (int l = k + 1; l < n; ++l) {
        const unsigned mask = base | (rows.get(i, l) << 2) | (rows.get(j, l) << 4) |
                              (rows.get(k, l) << 5);
        ++counts[static_cast<std::size_t>(table[mask])];
      }
    }
  }
}

long long wedge_count(const Graph& g) {
  long long wedges = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    long long d = g.degree(v);
    wedges += d * (d - 1) / 2;
  }
  return wedges;
}

long long triangle_count(const Graph& g, const BitRows& rows) {
  long long triple = 0;  // each triangle counted once per edge
  for (const Edge& e : g.edges()) {
    const std::uint64_t* ru = &rows.bits[static_cast<std::size_t>(e.u) * rows.words];
    const std::uint64_t* rv = &rows.bits[static_cast<std::size_t>(e.v) * rows.words];
    for (int w = 0; w < rows.words; ++w) triple += __builtin_popcountll(ru[w] & rv[w]);
  }
  return triple / 3;
}

}  // namespace

Profile3 profile3(const Graph& g) {
  const long long n = g.node_count();
  if (n < 3) throw DataError("3-profile needs at least 3 nodes");
  BitRows rows(g);
  const long long edges = static_cast<long long>(g.edge_count());
  const long long wedges = wedge_count(g);
  const long long triangles = triangle_count(g, rows);

  Profile3 p;
  const long long triples = n * (n - 1) * (n - 2) / 6;
  const long long paths = wedges - 3 * triangles;          // induced 2-edge paths
  const long long one_edge = edges * (n - 2) - 2 * paths - 3 * triangles;
  p.counts[3] = static_cast<std::uint64_t>(triangles);
  p.counts[2] = static_cast<std::uint64_t>(paths);
  p.counts[1] = static_cast<std::uint64_t>(one_edge);
  p.counts[0] = static_cast<std::uint64_t>(triples - one_edge - paths - triangles);
  return p;
}

Profile4 profile4_serial(const Graph& g) {
  const int n = g.node_count();
  if (n < 4) throw DataError("4-profile needs at least 4 nodes");
  BitRows rows(g);
  Profile4 p;
  for (int i = 0; i < n; ++i) census_from(rows, i, p.counts);
  return p;
}

Profile4 profile4(const Graph& g) {
  const int n = g.node_count();
  if (n < 4) throw DataError("4-profile needs at least 4 nodes");
  BitRows rows(g);

  const int slices = n;
  std::vector<std::array<std::uint64_t, 11>> partial(slices);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < slices; ++i) {
    partial[i] = {};
    census_from(rows, i, partial[i]);
  }

  Profile4 p;
  for (int i = 0; i < slices; ++i)
    for (int f = 0; f < 11; ++f) p.counts[f] += partial[i][f];
  return p;
}

Profile4 profile4_oracle(const Graph& g) {
  const int n = g.node_count();
  if (n < 4) throw DataError("4-profile needs at least 4 nodes");
  if (n > 40) throw DataError("profile4_oracle is guarded to n <= 40");

  // Canonical form: minimum mask over all 24 vertex relabelings.
  auto canonical = [](unsigned mask) {
    std::array<int, 4> perm = {0, 1, 2, 3};
    unsigned best = 64;
    do {
      unsigned relabeled = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (mask & (1u << pair_bit(a, b))) {
            int pa = perm[a], pb = perm[b];
            relabeled |= 1u << pair_bit(std::min(pa, pb), std::max(pa, pb));
          }
      best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::map<unsigned, int> canon_to_motif;
  const auto refs = reference_masks();
  for (int f = 0; f < 11; ++f) canon_to_motif[canonical(refs[f])] = f;

  Profile4 p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          unsigned mask = 0;
          int quad[4] = {i, j, k, l};
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (g.has_edge(quad[a], quad[b])) mask |= 1u << pair_bit(a, b);
          auto it = canon_to_motif.find(canonical(mask));
          if (it == canon_to_motif.end()) throw InternalError("quadruple with unknown canonical form");
          ++p.counts[static_cast<std::size_t>(it->second)];
        }
  return p;
}

}  // namespace charnet
