#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "charnet/common.hpp"
#include "charnet/community.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/graph.hpp"
#include "test_util.hpp"

using namespace charnet;
using namespace charnet::testutil;

namespace {

int community_count(const Partition& part) {
  int maxc = -1;
  for (int c : part.assignment) maxc = std::max(maxc, c);
  return maxc + 1;
}

// Enumerates every partition of n elements (restricted growth strings) and
// returns the best assignment by modularity.
std::pair<std::vector<int>, double> best_partition_exhaustive(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> rgs(n, 0);
  std::vector<int> best;
  double best_q = -1.0;
  while (true) {
    double q = modularity(g, rgs);
    if (q > best_q) {
      best_q = q;
      best = rgs;
    }
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return {best, best_q};
}

}  // namespace

TEST_CASE("modularity formula fixtures") {
  Graph two_triangles = disjoint_union(complete(3), complete(3));
  SUBCASE("single community scores zero") {
    CHECK(modularity(complete(3), {0, 0, 0}) == doctest::Approx(0.0));
  }
  SUBCASE("two cliques split by clique") {
    CHECK(modularity(two_triangles, {0, 0, 0, 1, 1, 1}) == doctest::Approx(0.5));
  }
  SUBCASE("all-singleton K3") {
    CHECK(modularity(complete(3), {0, 1, 2}) == doctest::Approx(-1.0 / 3.0));
  }
  SUBCASE("unassigned node is an error") {
    CHECK_THROWS_AS(modularity(complete(3), {0, 0}), DataError);
    CHECK_THROWS_AS(modularity(complete(3), {0, 0, -1}), DataError);
  }
}

TEST_CASE("louvain fixtures") {
  SUBCASE("one triangle, one community") {
    Partition part = louvain(complete(3), 7);
    CHECK(community_count(part) == 1);
    CHECK(part.q == doctest::Approx(0.0));
  }
  SUBCASE("two disjoint triangles") {
    Partition part = louvain(disjoint_union(complete(3), complete(3)), 7);
    CHECK(community_count(part) == 2);
    CHECK(part.q == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(part.assignment[0] == part.assignment[1]);
    CHECK(part.assignment[0] == part.assignment[2]);
    CHECK(part.assignment[3] == part.assignment[4]);
    CHECK(part.assignment[0] != part.assignment[3]);
  }
  SUBCASE("two cliques joined by a bridge match the exhaustive optimum") {
    GraphBuilder b(8);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) b.add_edge(u, v);
    for (int u = 4; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v) b.add_edge(u, v);
    b.add_edge(3, 4);
    Graph g = b.build();

    auto [best, best_q] = best_partition_exhaustive(g);
    // the optimum is the two cliques
    for (int v = 1; v < 4; ++v) CHECK(best[v] == best[0]);
    for (int v = 5; v < 8; ++v) CHECK(best[v] == best[4]);
    CHECK(best[0] != best[4]);

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      Partition part = louvain(g, seed);
      CHECK(community_count(part) == 2);
      CHECK(part.q == doctest::Approx(best_q).epsilon(1e-9));
      for (int v = 1; v < 4; ++v) CHECK(part.assignment[v] == part.assignment[0]);
      for (int v = 5; v < 8; ++v) CHECK(part.assignment[v] == part.assignment[4]);
    }
  }
}

TEST_CASE("louvain q matches an independent recomputation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_er(40, 0.1, seed);
    Partition part = louvain(g, seed * 31 + 5);
    CHECK(part.q == doctest::Approx(modularity(g, part.assignment)).epsilon(1e-9));
    CHECK(part.q >= -0.5);
    CHECK(part.q <= 1.0);
  }
}

TEST_CASE("louvain is seed-deterministic") {
  Graph g = gen_er(40, 0.15, 99);
  Partition a = louvain(g, 1234);
  Partition b = louvain(g, 1234);
  CHECK(a.assignment == b.assignment);
  CHECK(a.q == b.q);
}

TEST_CASE("edgeless graph: everyone alone, q zero") {
  Partition part = louvain(empty_graph(5), 3);
  CHECK(community_count(part) == 5);
  CHECK(part.q == 0.0);
}
