#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "charnet/common.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/graph.hpp"
#include "charnet/profiles.hpp"
#include "charnet/rng.hpp"
#include "test_util.hpp"

using namespace charnet;
using namespace charnet::testutil;

namespace {

std::uint64_t choose(std::uint64_t n, int k) {
  if (n < static_cast<std::uint64_t>(k)) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Graph permuted(const Graph& g, std::uint64_t seed) {
  std::vector<int> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  rng.shuffle(perm);
  GraphBuilder b(g.node_count());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v], e.weight);
  return b.build();
}

}  // namespace

TEST_CASE("3-profile fixtures") {
  CHECK(profile3(complete(3)).counts == std::array<std::uint64_t, 4>{0, 0, 0, 1});
  CHECK(profile3(path(3)).counts == std::array<std::uint64_t, 4>{0, 0, 1, 0});
  CHECK(profile3(path(4)).counts == std::array<std::uint64_t, 4>{0, 2, 2, 0});
  CHECK(profile3(empty_graph(5)).counts == std::array<std::uint64_t, 4>{10, 0, 0, 0});
  CHECK_THROWS_AS(profile3(empty_graph(2)), DataError);
}

TEST_CASE("4-profile fixtures") {
  SUBCASE("complete graph") {
    auto p = profile4(complete(4));
    CHECK(p.counts[10] == 1);
    CHECK(std::accumulate(p.counts.begin(), p.counts.end(), 0ull) == 1);
  }
  SUBCASE("four-cycle") {
    auto p = profile4(cycle(4));
    CHECK(p.counts[7] == 1);
  }
  SUBCASE("five-cycle leaves five paths") {
    auto p = profile4(cycle(5));
    CHECK(p.counts[4] == 5);
    CHECK(std::accumulate(p.counts.begin(), p.counts.end(), 0ull) == 5);
  }
  SUBCASE("path on four nodes") {
    auto p = profile4(path(4));
    CHECK(p.counts[4] == 1);
  }
  SUBCASE("empty graph on six nodes") {
    auto p = profile4(empty_graph(6));
    CHECK(p.counts[0] == 15);
  }
  SUBCASE("claw, paw, diamond") {
    CHECK(profile4(star(3)).counts[6] == 1);
    Graph paw = from_edges(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(profile4(paw).counts[8] == 1);
    Graph diamond = from_edges(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}});
    CHECK(profile4(diamond).counts[9] == 1);
  }
}

TEST_CASE("oracle agrees with both census kernels on sampled graphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = gen_er(20, 0.3, seed);
    auto expected = profile4_oracle(g);
    CHECK(profile4(g).counts == expected.counts);
    CHECK(profile4_serial(g).counts == expected.counts);
  }
}

TEST_CASE("census identities") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 10 + static_cast<int>(seed);
    Graph g = gen_er(n, 0.25, seed);
    auto p3 = profile3(g);
    auto p4 = profile4(g);
    CHECK(std::accumulate(p3.counts.begin(), p3.counts.end(), 0ull) == choose(n, 3));
    CHECK(std::accumulate(p4.counts.begin(), p4.counts.end(), 0ull) == choose(n, 4));
    // every edge lies in C(n-2,2) quadruples
    std::uint64_t weighted = 0;
    for (int f = 0; f < 11; ++f) weighted += static_cast<std::uint64_t>(kMotifEdges[f]) * p4.counts[f];
    CHECK(weighted == g.edge_count() * choose(n - 2, 2));
  }
}

TEST_CASE("complement symmetry of the 4-profile") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 8 + static_cast<int>(seed * 2) % 18;
    Graph g = gen_er(n, 0.3, seed);
    auto p = profile4(g);
    auto pc = profile4(complement(g));
    for (int f = 0; f < 11; ++f) CHECK(pc.counts[kMotifComplement[f]] == p.counts[f]);
  }
}

TEST_CASE("label invariance") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_er(16, 0.3, seed);
    Graph h = permuted(g, seed + 100);
    CHECK(profile3(h).counts == profile3(g).counts);
    CHECK(profile4(h).counts == profile4(g).counts);
  }
}

TEST_CASE("oracle guard") {
  CHECK_THROWS_AS(profile4_oracle(empty_graph(41)), DataError);
}
